#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cohom/lie/types.hpp"

namespace cohom::lie {

enum class Reality { Real, Complex, Quaternionic };

const char* to_string(Reality r);
Reality reality_from_string(const std::string& s);

/// Exact weight multiset of a finite-dimensional representation of a
/// reductive algebra. Values are immutable once built; the free
/// functions below produce new characters.
class Character {
 public:
  using Map = std::map<Weight, std::int64_t>;

  explicit Character(ReductiveAlgebra algebra);
  Character(ReductiveAlgebra algebra, Map weights);

  /// The one-dimensional trivial representation.
  static Character trivial(const ReductiveAlgebra& algebra);

  const ReductiveAlgebra& algebra() const { return algebra_; }
  const Map& weights() const { return weights_; }
  std::int64_t dim() const { return dim_; }
  std::int64_t multiplicity(const Weight& w) const;
  bool empty() const { return weights_.empty(); }

  /// Stable under every simple reflection of every simple block.
  bool weyl_invariant() const;

  Character dual() const;

  bool operator==(const Character& o) const {
    return algebra_ == o.algebra_ && weights_ == o.weights_;
  }

 private:
  ReductiveAlgebra algebra_;
  Map weights_;
  std::int64_t dim_ = 0;
};

/// Weights of the irreducible representation with the given highest
/// weight (Freudenthal's formula per simple block, torus charges carried
/// through). Throws cohom::Error if the weight is not dominant or has the
/// wrong length.
Character irreducible_character(const ReductiveAlgebra& algebra, const Weight& highest_weight);

/// Closed-form Weyl dimension formula, independent of the weight machinery.
std::int64_t weyl_dimension(const ReductiveAlgebra& algebra, const Weight& highest_weight);

/// Frobenius-Schur type of an irreducible: complex unless self-dual, then
/// real or quaternionic by the parity of <lambda, 2 rho^vee>.
Reality irreducible_reality(const ReductiveAlgebra& algebra, const Weight& highest_weight);

Character tensor(const Character& a, const Character& b);
Character direct_sum(const Character& a, const Character& b);
Character scaled(const Character& c, std::int64_t factor);
Character sym2(const Character& c);
/// Symmetric square of the dual; for a real representation this is the
/// space carrying a second fundamental form.
Character sym2_dual(const Character& c);
/// Exterior square.
Character lambda2(const Character& c);

/// External product of a character of g1 and one of g2, as a character of
/// g1 + g2 (simple blocks of g1, then of g2, then torus charges of g1 and g2).
Character outer(const Character& a, const Character& b);
ReductiveAlgebra outer(const ReductiveAlgebra& a, const ReductiveAlgebra& b);

/// Complexification of the underlying real representation: c itself for
/// real type, c + dual(c) otherwise.
Character complexification(const Character& c, Reality reality);

/// Irreducible summands as (highest weight, multiplicity), found by
/// repeatedly removing the irreducible character of the highest remaining
/// dominant weight (height order, ties lexicographic). Throws on a
/// non-Weyl-invariant input.
std::vector<std::pair<Weight, std::int64_t>> decompose(const Character& c);

/// Multiplicity of the trivial summand, by iterated extraction.
std::int64_t trivial_multiplicity(const Character& c);

}  // namespace cohom::lie
