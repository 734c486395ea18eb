#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cohom/lie/character.hpp"
#include "cohom/lie/types.hpp"

namespace cohom::lie {

/// Doubled orthonormal ("epsilon") coordinates of a weight of a classical
/// simple type: 2*eps_j. A_r yields r+1 entries (defined up to a common
/// shift), B/C/D yield r entries. Throws for exceptional types.
std::vector<int> to_doubled_eps(SimpleType type, const Weight& fund);
/// Inverse of to_doubled_eps; throws if the result is not integral.
Weight from_doubled_eps(SimpleType type, const std::vector<int>& eps2);
/// Length of the doubled-epsilon vector for a type.
int eps_length(SimpleType type);

/// A restriction rule from an ambient reductive algebra to a subalgebra,
/// given as a rational linear map on coordinates.
///
/// Input coordinates: for each ambient simple block its doubled epsilon
/// coordinates (classical) or doubled fundamental coordinates
/// (exceptional), then doubled torus charges. Output rows: for each sub
/// block either its doubled epsilon coordinates or its doubled
/// fundamental coordinates (per `sub_eps_mode`), then doubled torus
/// charges. The map is `matrix / denominator`.
struct Restriction {
  std::string name;
  ReductiveAlgebra ambient;
  ReductiveAlgebra sub;
  std::vector<bool> sub_eps_mode;
  std::vector<std::vector<int>> matrix;
  int denominator = 1;

  int input_length() const;
  int output_length() const;
  /// Throws cohom::Error when shapes disagree with the algebras.
  void validate() const;

  Weight apply(const Weight& ambient_weight) const;
  Character restrict(const Character& c) const;
};

/// Any weight map from an ambient algebra to a subalgebra induced by a
/// group homomorphism. Matrix rules and block embeddings both convert to
/// this, and branchings compose.
struct Branching {
  std::string name;
  ReductiveAlgebra ambient;
  ReductiveAlgebra sub;
  std::function<Weight(const Weight&)> map;

  Branching() = default;
  Branching(std::string name, ReductiveAlgebra ambient, ReductiveAlgebra sub,
            std::function<Weight(const Weight&)> map);
  /// Wraps a matrix rule.
  explicit Branching(Restriction r);

  Character restrict(const Character& c) const;
};

/// first then second: ambient(first) -> sub(first) = ambient(second) -> sub(second).
Branching compose(const Branching& first, const Branching& second);

/// Projection of a reductive algebra onto a subset of its simple blocks and
/// torus coordinates (the weight map of the inclusion of those ideals).
Branching ideal_inclusion(const ReductiveAlgebra& ambient, const std::vector<std::size_t>& simple_blocks,
                          const std::vector<int>& torus_coords);

/// Builds a restriction matrix row by row. Rows are addressed by
/// (sub block, local row) and columns by (ambient block, local column).
class RestrictionBuilder {
 public:
  RestrictionBuilder(std::string name, ReductiveAlgebra ambient, ReductiveAlgebra sub,
                     std::vector<bool> sub_eps_mode, int denominator = 1);

  /// Adds `value` at (output row, input column) in global indices.
  RestrictionBuilder& set(int row, int col, int value);
  /// Global index of local coordinate `k` of ambient block `b`
  /// (b == ambient.simples.size() addresses torus charges).
  int in(std::size_t b, int k) const;
  /// Global index of local coordinate `k` of sub block `b`.
  int out(std::size_t b, int k) const;

  Restriction build() const;

 private:
  Restriction r_;
};

}  // namespace cohom::lie
