#pragma once

#include <stdexcept>
#include <string>

namespace cohom {

/// Thrown when an operation's precondition is violated by its input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cohom
