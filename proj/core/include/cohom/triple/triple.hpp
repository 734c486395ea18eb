#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cohom/catalog/catalog.hpp"
#include "cohom/homogeneous/homogeneous.hpp"
#include "cohom/triple/verdict.hpp"

namespace cohom::triple {

using catalog::CompactGroupSpec;
using catalog::NamedRep;
using homogeneous::HomogeneousSpace;

/// Slice representation of a singular isotropy group on the normal space
/// of its orbit.
struct SliceRep {
  CompactGroupSpec stabilizer;
  NamedRep rep;
  int normal_dim = 0;
  /// Ineffective kernel of the slice action, as a group name ("1" when
  /// effective); informational.
  std::string kernel = "1";
};

/// Builds a slice representation from highest weights on the stabilizer.
SliceRep make_slice(const CompactGroupSpec& h, std::string rep_name, const std::vector<lie::Weight>& highest_weights,
                    lie::Reality reality, std::string kernel = "1");

/// How K sits inside a singular isotropy group: a catalog embedding tag
/// name, or a free descriptor that is taken on trust.
struct Inclusion {
  std::string descriptor;
  std::string catalog_tag;
};

struct AdmissibleTriple {
  std::string name;
  CompactGroupSpec group;
  CompactGroupSpec h;
  CompactGroupSpec k;
  CompactGroupSpec h_prime;
  SliceRep slice_h;
  SliceRep slice_h_prime;
  std::optional<Inclusion> k_in_h;
  std::optional<Inclusion> k_in_h_prime;

  int dim_m_from_h() const { return group.dimension() - h.dimension() + slice_h.normal_dim; }
  int dim_m_from_h_prime() const { return group.dimension() - h_prime.dimension() + slice_h_prime.normal_dim; }
};

enum class CheckStatus { Pass, Fail, Inconclusive };
const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Inconclusive;
  std::string detail;
};

struct AdmissibilityReport {
  std::vector<Check> checks;
  /// Fail if any check fails, else inconclusive if any is, else pass.
  CheckStatus overall() const;
};

AdmissibilityReport check_admissible(const AdmissibleTriple& t,
                                     const catalog::Catalog& cat = catalog::Catalog::builtin());

/// A cohomogeneity-one manifold from its triple, with a verdict per
/// singular orbit ("B" for G/H, "B'" for G/H').
struct CohomOneManifold {
  AdmissibleTriple triple;
  int dim_m = 0;
  int regular_orbit_dim = 0;
  std::map<std::string, Finding> verdicts;

  /// Throws cohom::Error when the two sides disagree on dim M.
  static CohomOneManifold from_triple(AdmissibleTriple t);
  /// Singular orbit "B" or "B'" as a homogeneous space (no isotropy data).
  HomogeneousSpace orbit(const std::string& which) const;
  void record(const std::string& which, const Finding& f);
};

/// Strict form of the bound 2 dim G/H < dim M + k - 1, k the cohomogeneity
/// of H on G/H. Never returns not_totally_geodesic.
Finding dimension_bound(int orbit_dim, int dim_m, int k);
Finding criterion_dimension_bound(const HomogeneousSpace& orbit, int dim_m);

/// Dimension of the largest ideal of g inside h. With isotropy data this
/// is the kernel of the isotropy representation; without it, a maximal
/// rank stabilizer contains the identity component of the centre.
/// nullopt when neither applies.
std::optional<int> kernel_ideal_dim(const HomogeneousSpace& orbit);
/// totally_geodesic when G acts on G/H with a positive-dimensional kernel.
Finding criterion_kernel(const HomogeneousSpace& orbit);

struct EulerReport {
  bool precondition_ok = false;
  bool chi_b = false;
  bool chi_b_prime = false;
  std::string bookkeeping;
  std::map<std::string, Finding> marked;
};

/// For non-semisimple G: every singular orbit with positive Euler
/// characteristic is totally geodesic through the kernel criterion. The
/// bookkeeping line records chi(M) = chi(B) + chi(B').
EulerReport criterion_euler(const CohomOneManifold& m);

/// dim B + dim B' < dim M; false means two totally geodesic orbits would
/// have to meet.
bool frankel_check(int b1_dim, int b2_dim, int dim_m);

void to_json(nlohmann::json& j, const AdmissibilityReport& r);
void to_json(nlohmann::json& j, const CohomOneManifold& m);
/// Reads a triple in the catalog style: group names plus slice highest
/// weights and reality. Throws catalog::SchemaError.
AdmissibleTriple triple_from_json(const nlohmann::json& j);
nlohmann::json triple_to_json(const AdmissibleTriple& t);

}  // namespace cohom::triple
