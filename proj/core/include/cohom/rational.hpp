#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "cohom/error.hpp"

namespace cohom {

/// Exact rational with a positive denominator, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {  // NOLINT(google-explicit-constructor)
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
  Rational operator-() const { return {-num, den}; }

  /// Representative in [0, 1).
  Rational frac() const {
    auto r = num % den;
    if (r < 0) r += den;
    return {r, den};
  }
  bool is_integer() const { return den == 1; }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::strong_ordering operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace cohom
