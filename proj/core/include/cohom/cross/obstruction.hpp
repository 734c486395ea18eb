#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom/catalog/catalog.hpp"
#include "cohom/lie/restriction.hpp"

namespace cohom::cross {

/// A connected subgroup of the ambient group, known through the
/// restriction of ambient weights to its own weights.
struct SubgroupData {
  std::string name;
  lie::Branching rule;

  const lie::ReductiveAlgebra& algebra() const { return rule.sub; }
  bool semisimple() const { return rule.sub.semisimple(); }
  /// Real dimension of the fixed space in the ambient representation.
  int fixed_dim(const catalog::NamedRep& ambient_rep) const;
  /// The semisimple part: torus coordinates dropped.
  SubgroupData derived() const;
};

/// Question: can H_v lie inside some conjugate of K?
struct ContainmentQuestion {
  std::string ambient;
  std::vector<catalog::NamedRep> ambient_reps;
  SubgroupData h_v;
  SubgroupData k;
};

struct Obstruction {
  bool obstructed = false;
  /// "dimension", "rank", "fixed-space", "equal-dimension-fixed-space",
  /// "equal-dimension-algebra", "restricted-signature", or empty when
  /// nothing fires.
  std::string rule;
  std::string detail;
};

/// Necessary conditions for H_v in gKg^-1, tried in order: dimension,
/// rank, fixed-space dimensions (against K, or its semisimple part when
/// H_v is semisimple), equality of fixed dimensions when the dimensions
/// agree, and equality of restricted-character signatures when the
/// dimensions agree.
Obstruction containment_obstruction(const ContainmentQuestion& q);

/// Decomposition of a restricted character normalised for comparison up
/// to automorphisms: torus charges divided by their gcd, minimum over the
/// sign of the torus and over duality of each simple block.
std::vector<std::pair<lie::Weight, std::int64_t>> normalised_signature(const lie::Character& c);

}  // namespace cohom::cross
