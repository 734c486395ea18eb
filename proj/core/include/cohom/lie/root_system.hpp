#pragma once

#include <cstdint>
#include <vector>

#include "cohom/lie/types.hpp"

namespace cohom::lie {

/// Exact root data for one simple type. Every quantity that would be
/// rational is stored scaled to an integer with the scale alongside.
class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  /// Shared immutable instance per type.
  static const RootSystem& of(SimpleType type);

  SimpleType type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan(i, j) = <alpha_i, alpha_j^vee>; row i is alpha_i in
  /// fundamental-weight coordinates.
  int cartan(int i, int j) const { return cartan_[i * rank() + j]; }
  /// (alpha_i, alpha_i) with the shortest roots normalised to 2.
  int root_length2(int i) const { return length2_[i]; }

  /// Positive roots in simple-root coordinates, sorted by height.
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }
  /// The same roots in fundamental-weight coordinates.
  const std::vector<Weight>& positive_roots_fund() const { return pos_roots_fund_; }
  const Weight& highest_root() const { return pos_roots_fund_.back(); }

  /// form_scale() * (lambda, mu) for weights in fundamental coordinates.
  std::int64_t form(const Weight& a, const Weight& b) const;
  std::int64_t form_scale() const { return form_scale_; }

  /// Coefficients of a weight on the simple roots, scaled by
  /// root_coord_scale() so they are integers.
  std::vector<std::int64_t> simple_root_coords(const Weight& w) const;
  std::int64_t root_coord_scale() const { return root_scale_; }
  /// root_coord_scale() * (sum of simple-root coefficients).
  std::int64_t height(const Weight& w) const;

  /// s_i(w) = w - w_i alpha_i.
  Weight reflect(const Weight& w, int i) const;
  bool dominant(const Weight& w) const;
  /// Dominant representative of the Weyl orbit.
  Weight to_dominant(const Weight& w) const;
  /// All elements of the Weyl orbit of w.
  std::vector<Weight> orbit(const Weight& w) const;

  Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }

  /// <lambda, 2 rho^vee>, which decides real vs quaternionic for
  /// self-dual irreducibles.
  std::int64_t pairing_two_rho_coroot(const Weight& w) const;

 private:
  SimpleType type_;
  std::vector<int> cartan_;
  std::vector<int> length2_;
  std::vector<std::vector<int>> pos_roots_;
  std::vector<Weight> pos_roots_fund_;
  std::vector<std::vector<int>> coroot_coeffs_;  // positive coroots on simple coroots
  std::vector<std::int64_t> gram_;               // scaled (omega_i, omega_j)
  std::int64_t form_scale_ = 1;
  std::vector<std::int64_t> root_coords_;        // scaled inverse of the Cartan transpose
  std::int64_t root_scale_ = 1;
};

}  // namespace cohom::lie
