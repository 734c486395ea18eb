#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cohom/cross/obstruction.hpp"
#include "cohom/homogeneous/homogeneous.hpp"
#include "cohom/triple/triple.hpp"

namespace cohom::cross {

using homogeneous::CrossKind;
using homogeneous::CrossSpace;
using triple::Finding;
using triple::SliceRep;
using triple::Verdict;

/// One slice representation candidate with its origin in the catalog.
struct SliceCandidate {
  SliceRep nu;
  /// Catalog pair the candidate factors through ("SO(3) standard", ...).
  std::string pair;
  std::string factor_map;
  /// Determinant twist or circle degree; 0 when not twisted.
  int twist = 0;
  /// Candidates identified with this one as real representations.
  std::vector<std::string> identified;
};

/// A finite-order element of the stabilizer with its action on the
/// tangent and slice representations, as phases exp(2 pi i q), q mod 1.
struct SymmetryAction {
  std::string element;
  std::vector<Rational> exponent;
  std::vector<Rational> tau_phases;
  std::vector<Rational> nu_phases;

  /// sigma^2 acts trivially on both representations.
  bool involutive() const;
};

/// The element of SO(2) acting as -1 through the k-th power map, with its
/// action on the tangent character tau (charges +-1) and on nu_k.
std::optional<SymmetryAction> circle_symmetry(int k);

/// totally_geodesic when the sigma-fixed part of S^2(tau^*) (x) nu is zero;
/// inconclusive otherwise, or when there is no such sigma.
Finding sigma_parity_check(const std::optional<SymmetryAction>& s);
Finding sigma_parity_check(int k_twist);

/// Trivial multiplicity of S^2(tau^*) (x) tau for the complexified tangent
/// representation.
std::int64_t isotropy_invariants(const CrossSpace& c);
/// totally_geodesic when isotropy_invariants is 0, inconclusive otherwise.
Finding isotropy_slice_check(const CrossSpace& c);

/// Real equivalence of two slice representations.
bool real_equivalent(const SliceRep& a, const SliceRep& b);

/// Every sphere-transitive representation of the stabilizer from the
/// catalog that is a representation of the stabilizer itself (not only of
/// a cover) and, for disconnected stabilizers, is stable under the
/// component group. Real-equivalent candidates are merged.
std::vector<SliceCandidate> enumerate_slice_candidates(const CrossSpace& c,
                                                        const catalog::Catalog& cat = catalog::Catalog::builtin());

/// Witness manifold for a non totally geodesic orbit, with the display
/// fields of the exceptional table.
struct WitnessModel {
  std::string model;
  std::string space;
  std::string group;
  std::string stabilizer;
  std::string manifold;
  std::string nu;
  int manifold_dim = 0;
};

struct CrossCase {
  CrossSpace cross;
  SliceCandidate candidate;
  std::optional<WitnessModel> witness;
  Finding verdict;
  std::optional<ContainmentQuestion> containment;
  int dim_m = 0;
};

/// The subgroups H_v (generic isotropy of H on the tangent space) and K
/// (generic isotropy of H on the slice) inside G, when the case data
/// knows them.
std::optional<ContainmentQuestion> containment_question(const CrossSpace& c, const SliceCandidate& s);

/// Witness for a candidate, when one is recorded.
std::optional<WitnessModel> witness_for(const CrossSpace& c, const SliceCandidate& s);

/// Full case table for one space: tau, dimension bound, sigma parity,
/// H_v-in-K obstructions, witnesses, in that order.
std::vector<CrossCase> classify_cross(const CrossSpace& c, const catalog::Catalog& cat = catalog::Catalog::builtin());

/// The spaces the exceptional table runs over: cross_catalog() without CP^1
/// and HP^1, which coincide with S^2 and S^4.
std::vector<CrossSpace> classified_spaces();

/// Cases over classified_spaces(); the non totally geodesic subset is the
/// exceptional table.
std::vector<CrossCase> classify_all(const catalog::Catalog& cat = catalog::Catalog::builtin());

std::string exceptional_table_markdown(const std::vector<CrossCase>& cases);
nlohmann::json exceptional_table_json(const std::vector<CrossCase>& cases);
/// Every case with verdict and rule, as JSON.
nlohmann::json cases_json(const std::vector<CrossCase>& cases);

}  // namespace cohom::cross
