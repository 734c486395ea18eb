#pragma once

#include <string>
#include <vector>

#include "cohom/lie/restriction.hpp"
#include "cohom/rational.hpp"

namespace cohom::catalog {

enum class Classical { SU, U, Sp, SO };

/// A classical matrix group with its natural orthonormal ("epsilon")
/// coordinates on the maximal torus. The Lie algebra is in the same
/// canonical form parse_group produces.
struct ClassicalGroup {
  Classical kind = Classical::SU;
  int n = 1;

  lie::ReductiveAlgebra algebra() const;
  /// Number of epsilon coordinates (n, or n/2 for SO).
  int eps_count() const;
  std::string name() const;
};

/// Epsilon coordinates of a weight given in canonical algebra coordinates.
std::vector<Rational> natural_eps(const ClassicalGroup& g, const lie::Weight& w);
/// Inverse of natural_eps; throws cohom::Error when the epsilon vector is
/// not a weight of g.
lie::Weight from_natural_eps(const ClassicalGroup& g, const std::vector<Rational>& eps);

/// Highest weight of the defining representation of g.
lie::Weight defining_weight(const ClassicalGroup& g);

/// Where one epsilon coordinate of the ambient torus goes: coefficient
/// `coeff` times epsilon `coord` of sub factor `factor`.
struct SlotTarget {
  int factor = 0;
  int coord = 0;
  int coeff = 1;
};

/// A subgroup of a classical group given by a block pattern on the
/// maximal torus: each ambient epsilon coordinate is a signed sum of
/// epsilon coordinates of the factors (several slots pointing at the same
/// factor coordinate give a diagonal embedding).
struct BlockEmbedding {
  std::string name;
  ClassicalGroup ambient;
  std::vector<ClassicalGroup> factors;
  std::vector<std::vector<SlotTarget>> slots;

  lie::ReductiveAlgebra sub_algebra() const;
  lie::Branching branching() const;
};

}  // namespace cohom::catalog
