#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cohom/catalog/catalog.hpp"
#include "cohom/triple/triple.hpp"

namespace cohom::wallach {

using catalog::CompactGroupSpec;
using lie::ReductiveAlgebra;
using triple::Finding;

/// One instance of a row of the list of even-dimensional positively curved
/// homogeneous spaces G1/H1.
struct WallachRow {
  int index = 0;
  /// Parameter value; 0 for unparametrised rows.
  int n = 0;
  CompactGroupSpec g1;
  CompactGroupSpec h1;
  int dim = 0;
  bool active = true;
  /// Rule that excluded the row ("ideal-test", "second-orbit-search", ...).
  std::string rule;
  std::string reason;
  /// The exclusion is quoted, not computed.
  bool asserted = false;

  std::string label() const;
};

/// Rows of the catalog list instantiated for n in [n_min, n_max]. Row 1
/// starts at n = 2 (n = 1 repeats row 3).
std::vector<WallachRow> wallach_rows(int n_max = 6, const catalog::Catalog& cat = catalog::Catalog::builtin());

/// True when h contains a simple ideal of type su(m) or sp(m), m >= 2
/// (including the coincidences sp(1) = su(2), sp(2) = so(5), su(4) = so(6)).
bool has_su_or_sp_ideal(const ReductiveAlgebra& h);

/// Rows that survive when the slice of H is nontrivial on H1: the ideal
/// test, then the second-orbit search for G2/SU(3) and Spin(5)/Spin(4).
std::vector<WallachRow> wallach_filter(int n_max = 6, const catalog::Catalog& cat = catalog::Catalog::builtin());

struct CenterReport {
  bool precondition_ok = false;
  bool center_in_h = false;
  int center_dim = 0;
  bool pass = false;
  Finding orbit_verdict;
  std::string detail;
};

/// For non-semisimple g and an orbit b with positive Euler characteristic:
/// the centre lies in H, b is totally geodesic, and almost effectiveness
/// leaves a centre of dimension one.
CenterReport center_dimension_check(const CompactGroupSpec& g, const homogeneous::HomogeneousSpace& b);

struct GoNonzeroReport {
  bool ok = false;
  /// "g_o" when the su(2) is g_o itself, "k_o" when it sits in the slice stabilizer.
  std::string su2_location;
  int fixed_codim = 0;
  std::string detail;
};

/// The kernel ideal g_o of the action on B is nonzero: exhibit an su(2)
/// whose fixed set has codimension 4. g_o must be simple of type su or sp.
GoNonzeroReport g_o_nonzero_branch(const ReductiveAlgebra& g_o);

/// One candidate for the second singular isotropy algebra h' when
/// G1 = SU(m), H1 = U(m-1).
struct CandidateHPrime {
  int row = 0;
  std::string n_ideal;
  std::string h_prime;
  ReductiveAlgebra n_algebra;
  ReductiveAlgebra h_prime_algebra;
  int dim_v_prime = 0;
  bool maximal_rank = false;
  /// Row only exists for some m (the so(4) row needs m = 4).
  bool applicable = true;
  /// dim B + dim B' < dim M; false kills a maximal-rank row.
  bool frankel = true;
  bool excluded = false;
  std::string reason;
};

/// The candidate table for G1 = SU(m), m >= 3: seven rows for m >= 4; for
/// m = 3 the u(2) row merges into the first and the so(4) row drops.
/// Throws cohom::Error for m < 3.
std::vector<CandidateHPrime> su_row_candidates(int m);

/// Twists j of the slice (det A)^j A compatible with an su(2)-type h'
/// containing k; m >= 4 forces {-1}, m = 3 allows {-1, 0}.
std::vector<int> compatible_twists(int m, int window = 6);
/// Twist used after identifying twists related by the normaliser of h.
int forced_twist(int m);

/// The triple (H, K, H') the SU(m) action must have.
struct ForcedTriple {
  std::string h, k, h_prime;
};
ForcedTriple forced_triple(int m);

/// A real irreducible summand of a representation of K.
struct RealModule {
  std::vector<lie::Weight> constituents;
  int real_dim = 0;
  int multiplicity = 0;
  bool trivial = false;
};

struct ModuleReport {
  std::string row;
  /// Real dimension of k.
  int k_dim = 0;
  /// Real dimension of the trivial summand.
  int trivial_dim = 0;
  /// Non-trivial summands outside k.
  std::vector<RealModule> modules;
  bool pairwise_inequivalent = false;
  std::vector<std::string> swaps;
  std::string detail;
};

/// Isotropy decomposition of an ambient adjoint character under the
/// subgroup of `rule`, with the adjoint of the subgroup removed.
ModuleReport decompose_isotropy(const lie::Branching& rule, const lie::Character& ambient_adjoint,
                                const lie::Character& sub_adjoint);

/// Row 6 (Sp(3), K = Sp(1)^2) or row 5 (Sp(n), K -> T^2 x Sp(n-2)).
/// Throws cohom::Error for other rows or when the decomposition does not
/// have the expected shape.
ModuleReport module_decomposition_check(int row, int n = 3);

enum class DiffeoType {
  Sphere,
  ComplexProj,
  QuatProj,
  CrossByFixedPoint,
  SphereOrComplexProj,
  SphereComplexOrQuatProj,
  Excluded,
  Inconclusive
};
const char* to_string(DiffeoType d);

struct Gate {
  std::string gate;
  std::string outcome;
  std::string rule;
};

struct PositiveCurvatureVerdict {
  int center_dim = 0;
  /// "fixed-point", "codim-2", "g_o_nonzero", "g_o_zero", or empty when the
  /// tree stops before branching.
  std::string branch;
  DiffeoType diffeo_type = DiffeoType::Inconclusive;
  std::string model;
  std::string rule_used;
  std::vector<Gate> trace;
};

struct PositiveCurvatureInput {
  triple::CohomOneManifold manifold;
  /// The caller asserts a G-invariant metric of positive curvature.
  bool positive_curvature = false;
};

PositiveCurvatureVerdict classify_positive_curvature(const PositiveCurvatureInput& in,
                                                     const catalog::Catalog& cat = catalog::Catalog::builtin());

std::string wallach_table_markdown(const std::vector<WallachRow>& rows);
std::string candidate_table_markdown(const std::vector<CandidateHPrime>& rows);

void to_json(nlohmann::json& j, const WallachRow& r);
void to_json(nlohmann::json& j, const CandidateHPrime& c);
void to_json(nlohmann::json& j, const ModuleReport& r);
void to_json(nlohmann::json& j, const PositiveCurvatureVerdict& v);

}  // namespace cohom::wallach
