#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cohom/catalog/classical.hpp"
#include "cohom/error.hpp"
#include "cohom/homogeneous/homogeneous.hpp"
#include "cohom/wallach/wallach.hpp"

namespace cohom::wallach {

const char* to_string(DiffeoType d) {
  switch (d) {
    case DiffeoType::Sphere: return "sphere";
    case DiffeoType::ComplexProj: return "complex_projective";
    case DiffeoType::QuatProj: return "quaternionic_projective";
    case DiffeoType::CrossByFixedPoint: return "cross_by_fixed_point";
    case DiffeoType::SphereOrComplexProj: return "sphere_or_complex_projective";
    case DiffeoType::SphereComplexOrQuatProj: return "sphere_complex_or_quaternionic_projective";
    case DiffeoType::Excluded: return "excluded";
    case DiffeoType::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using lie::SimpleType;

ReductiveAlgebra make_alg(std::vector<SimpleType> s, int torus) {
  ReductiveAlgebra a;
  a.simples = std::move(s);
  a.torus_rank = torus;
  return a.canonical();
}

std::vector<SimpleType> minus(std::vector<SimpleType> a, const std::vector<SimpleType>& b) {
  for (const auto& t : b) a.erase(std::find(a.begin(), a.end(), t));
  return a;
}

// Every sub-multiset of the simple blocks common to g and h.
void common_subsets(const std::vector<std::pair<SimpleType, int>>& avail, std::size_t i, std::vector<SimpleType>& cur,
                    std::vector<std::vector<SimpleType>>& out) {
  if (i == avail.size()) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= avail[i].second; ++c) {
    for (int j = 0; j < c; ++j) cur.push_back(avail[i].first);
    common_subsets(avail, i + 1, cur, out);
    for (int j = 0; j < c; ++j) cur.pop_back();
  }
}

struct RowMatch {
  WallachRow row;
  ReductiveAlgebra g_o;
};

// Splits g = R + g_o + g1 and h = R + g_o + h1 with g1/h1 on the list,
// preferring the smallest g_o.
std::optional<RowMatch> match_row(const ReductiveAlgebra& g, const ReductiveAlgebra& h,
                                  const std::vector<WallachRow>& rows) {
  if (h.torus_rank < 1) return std::nullopt;
  const auto gc = g.canonical(), hc = h.canonical();
  std::map<SimpleType, int> cg, ch;
  for (const auto& s : gc.simples) ++cg[s];
  for (const auto& s : hc.simples) ++ch[s];
  std::vector<std::pair<SimpleType, int>> avail;
  for (const auto& [t, c] : cg)
    if (ch.count(t)) avail.emplace_back(t, std::min(c, ch[t]));
  std::vector<std::vector<SimpleType>> subsets;
  std::vector<SimpleType> cur;
  common_subsets(avail, 0, cur, subsets);
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& s : subsets) {
    const auto g1 = make_alg(minus(gc.simples, s), 0);
    const auto h1 = make_alg(minus(hc.simples, s), hc.torus_rank - 1);
    for (const auto& r : rows)
      if (r.g1.algebra.canonical() == g1 && r.h1.algebra.canonical() == h1) return RowMatch{r, make_alg(s, 0)};
  }
  return std::nullopt;
}

// Two computed facts behind the Spin(7)/Spin(6) exclusion: su(3) fixes a
// single line of R^7, and the element acting as -1 on S^6's tangent space
// acts on C^4 by a scalar.
std::string spin7_facts() {
  using catalog::Classical;
  catalog::BlockEmbedding e;
  e.name = "SU(3) in SO(7)";
  e.ambient = {Classical::SO, 7};
  e.factors = {{Classical::SU, 3}};
  e.slots = {{{0, 0}}, {{0, 1}}, {{0, 2}}};
  const auto so7 = e.ambient.algebra();
  const auto vec = lie::irreducible_character(so7, catalog::defining_weight(e.ambient));
  const auto fix = lie::trivial_multiplicity(e.branching().restrict(vec));

  const auto s6 = homogeneous::make_cross(homogeneous::CrossKind::Sphere, 6);
  std::set<Rational> phases;
  if (s6.symmetry) {
    const auto& h = s6.presentation.stabilizer.algebra;
    lie::Weight hw(std::vector<int>(static_cast<std::size_t>(h.rank()), 0));
    hw.c[0] = 1;
    const auto c4 = lie::irreducible_character(h, hw);
    for (const auto& [w, m] : c4.weights())
      phases.insert(homogeneous::pairing(w, s6.symmetry->exponent));
  }
  std::ostringstream os;
  os << "Fix(R^7, su(3)) = " << fix << " so su(3) lies in a unique so(6); the element acting as -1 on T S^6 acts on "
     << "C^4 with " << phases.size() << " distinct phase" << (phases.size() == 1 ? "" : "s");
  return os.str();
}

void gate(PositiveCurvatureVerdict& v, std::string g, std::string outcome, std::string rule) {
  v.trace.push_back({std::move(g), std::move(outcome), std::move(rule)});
}

PositiveCurvatureVerdict stop(PositiveCurvatureVerdict v, DiffeoType d, std::string rule, std::string model = {}) {
  v.diffeo_type = d;
  v.rule_used = std::move(rule);
  v.model = std::move(model);
  return v;
}

}  // namespace

PositiveCurvatureVerdict classify_positive_curvature(const PositiveCurvatureInput& in, const catalog::Catalog& cat) {
  PositiveCurvatureVerdict v;
  const auto& m = in.manifold;
  const auto& t = m.triple;
  v.center_dim = t.group.algebra.torus_rank;
  const auto dm = std::to_string(m.dim_m);

  if (m.dim_m % 2 != 0) {
    gate(v, "even-dimension", "fails: dim M = " + dm, "even-dimension");
    return stop(v, DiffeoType::Inconclusive, "even-dimension");
  }
  gate(v, "even-dimension", "dim M = " + dm, "even-dimension");
  if (t.group.algebra.semisimple()) {
    gate(v, "non-semisimple", "fails: " + t.group.name + " is semisimple", "non-semisimple");
    return stop(v, DiffeoType::Inconclusive, "non-semisimple");
  }
  gate(v, "non-semisimple", "torus rank " + std::to_string(v.center_dim), "non-semisimple");
  if (!in.positive_curvature) {
    gate(v, "positive-curvature", "fails: not asserted", "positive-curvature");
    return stop(v, DiffeoType::Inconclusive, "positive-curvature");
  }
  gate(v, "positive-curvature", "asserted by caller", "positive-curvature");

  const bool b_first = homogeneous::euler_positive(m.orbit("B"));
  if (!b_first && !homogeneous::euler_positive(m.orbit("B'"))) {
    gate(v, "euler-orbit", "fails: neither singular orbit has maximal-rank isotropy", "euler-orbit");
    return stop(v, DiffeoType::Excluded, "euler-orbit");
  }
  const auto which = b_first ? "B" : "B'";
  const auto b = m.orbit(which);
  const auto& stab = b_first ? t.h : t.h_prime;
  const auto& other = b_first ? t.h_prime : t.h;
  const int normal = b_first ? t.slice_h.normal_dim : t.slice_h_prime.normal_dim;
  const int other_normal = b_first ? t.slice_h_prime.normal_dim : t.slice_h.normal_dim;
  gate(v, "euler-orbit", std::string(which) + " = " + b.name, "euler-orbit");

  const auto c = center_dimension_check(t.group, b);
  if (!c.pass) {
    gate(v, "center", "fails: " + c.detail, "center-dimension");
    return stop(v, DiffeoType::Excluded, "center-dimension");
  }
  gate(v, "center", c.detail, "center-dimension");

  if (b.dim() == 0) {
    v.branch = "fixed-point";
    gate(v, "fixed-point", "G fixes a point; M is the one-point compactification of the slice", "fixed-point-cross");
    return stop(v, DiffeoType::CrossByFixedPoint, "fixed-point-cross", "CROSS");
  }
  if (normal == 2) {
    v.branch = "codim-2";
    gate(v, "codim-2", "the centre fixes B of codimension 2", "codim-2-fixed-set");
    return stop(v, DiffeoType::SphereOrComplexProj, "codim-2-fixed-set", "S^" + dm + " or CP^" + std::to_string(m.dim_m / 2));
  }

  const auto rows = wallach_filter(std::max(6, t.group.rank() + 2), cat);
  const auto match = match_row(t.group.algebra, stab.algebra, rows);
  if (!match) {
    gate(v, "wallach-row", "fails: no split of " + t.group.name + " / " + stab.name + " matches a listed row",
         "wallach-row");
    return stop(v, DiffeoType::Inconclusive, "wallach-row");
  }
  const auto& row = match->row;
  gate(v, "wallach-row", row.label() + ": " + row.g1.name + "/" + row.h1.name, "wallach-row");

  if (!match->g_o.simples.empty()) {
    v.branch = "g_o_nonzero";
    const auto r = g_o_nonzero_branch(match->g_o);
    gate(v, "g_o", r.detail, "su2-fixed-codim-4");
    if (!r.ok) return stop(v, DiffeoType::Excluded, "g_o-type");
    const auto q = std::to_string(m.dim_m / 4);
    return stop(v, DiffeoType::SphereComplexOrQuatProj, "su2-fixed-codim-4",
                "S^" + dm + ", CP^" + std::to_string(m.dim_m / 2) + (m.dim_m % 4 == 0 ? " or HP^" + q : ""));
  }
  v.branch = "g_o_zero";
  if (!row.active) {
    gate(v, "row-filter", row.reason + (row.asserted ? " (asserted)" : ""), row.rule);
    return stop(v, DiffeoType::Excluded, row.rule);
  }
  switch (row.index) {
    case 1: {
      const int mm = row.g1.rank() + 1;
      if (other.algebra.torus_rank < 1) {
        gate(v, "su-row", "fails: " + other.name + " has no circle factor to drop", "su-row-candidates");
        return stop(v, DiffeoType::Inconclusive, "su-row-candidates");
      }
      const auto hp = make_alg(other.algebra.simples, other.algebra.torus_rank - 1);
      const CandidateHPrime* hit = nullptr;
      for (const auto& cand : su_row_candidates(mm)) {
        if (!cand.applicable || cand.h_prime_algebra.canonical() != hp || cand.dim_v_prime != other_normal) continue;
        if (!hit || (hit->excluded && !cand.excluded)) hit = &cand;
      }
      if (!hit) {
        gate(v, "su-row", "fails: " + hp.name() + " with slice " + std::to_string(other_normal) + " is not a candidate",
             "su-row-candidates");
        return stop(v, DiffeoType::Inconclusive, "su-row-candidates");
      }
      if (hit->excluded) {
        gate(v, "su-row", "row " + std::to_string(hit->row) + ": " + hit->reason, "su-row-candidates");
        return stop(v, DiffeoType::Excluded, "su-row-candidates");
      }
      const auto f = forced_triple(mm);
      gate(v, "su-row", "row " + std::to_string(hit->row) + " survives; twist j = " + std::to_string(forced_twist(mm)) +
                            ", (H, K, H') = (" + f.h + ", " + f.k + ", " + f.h_prime + ")",
           "su-row-survivor");
      return stop(v, DiffeoType::QuatProj, "su-row-survivor", "HP^" + std::to_string(mm - 1));
    }
    case 3: {
      gate(v, "two-orbit-frankel", spin7_facts() + "; both singular orbits are totally geodesic and too large (asserted)",
           "two-orbit-frankel");
      return stop(v, DiffeoType::Excluded, "two-orbit-frankel");
    }
    case 5: {
      const auto r = module_decomposition_check(5, row.n);
      gate(v, "module-parity", r.detail, "module-parity");
      return stop(v, DiffeoType::Excluded, "module-parity");
    }
    case 6: {
      const auto r = module_decomposition_check(6);
      gate(v, "concavity", r.detail + "; the Killing-norm profile is not concave (asserted)", "concavity");
      return stop(v, DiffeoType::Excluded, "concavity");
    }
    default:
      gate(v, "row-rule", "no rule decides " + row.label(), "no-rule");
      return stop(v, DiffeoType::Inconclusive, "no-rule");
  }
}

std::string wallach_table_markdown(const std::vector<WallachRow>& rows) {
  std::ostringstream os;
  os << "| row | G1 | H1 | dim | status | rule |\n|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.label() << " | " << r.g1.name << " | " << r.h1.name << " | " << r.dim << " | "
       << (r.active ? "active" : r.asserted ? "excluded (asserted)" : "excluded") << " | " << r.rule << " |\n";
  return os.str();
}

std::string candidate_table_markdown(const std::vector<CandidateHPrime>& rows) {
  std::ostringstream os;
  os << "| row | n | h' | dim V' | maximal rank | status |\n|---|---|---|---|---|---|\n";
  for (const auto& c : rows)
    os << "| " << c.row << " | " << c.n_ideal << " | " << c.h_prime << " | " << c.dim_v_prime << " | "
       << (c.maximal_rank ? "yes" : "no") << " | " << (c.excluded ? c.reason : "survives") << " |\n";
  return os.str();
}

void to_json(nlohmann::json& j, const WallachRow& r) {
  j = {{"row", r.index}, {"n", r.n},         {"G1", r.g1.name},           {"H1", r.h1.name},
       {"dim", r.dim},   {"active", r.active}, {"rule", r.rule}, {"reason", r.reason}, {"asserted", r.asserted}};
}

void to_json(nlohmann::json& j, const CandidateHPrime& c) {
  j = {{"row", c.row},
       {"n", c.n_ideal},
       {"h_prime", c.h_prime},
       {"dim_V_prime", c.dim_v_prime},
       {"maximal_rank", c.maximal_rank},
       {"applicable", c.applicable},
       {"frankel", c.frankel},
       {"excluded", c.excluded},
       {"reason", c.reason}};
}

void to_json(nlohmann::json& j, const ModuleReport& r) {
  auto mods = nlohmann::json::array();
  for (const auto& m : r.modules) mods.push_back({{"real_dim", m.real_dim}, {"multiplicity", m.multiplicity}});
  j = {{"row", r.row},
       {"k_dim", r.k_dim},
       {"trivial_dim", r.trivial_dim},
       {"modules", mods},
       {"pairwise_inequivalent", r.pairwise_inequivalent},
       {"swaps", r.swaps},
       {"detail", r.detail}};
}

void to_json(nlohmann::json& j, const PositiveCurvatureVerdict& v) {
  auto trace = nlohmann::json::array();
  for (const auto& g : v.trace) trace.push_back({{"gate", g.gate}, {"outcome", g.outcome}, {"rule", g.rule}});
  j = {{"center_dim", v.center_dim}, {"branch", v.branch}, {"diffeo_type", to_string(v.diffeo_type)},
       {"model", v.model},           {"rule_used", v.rule_used}, {"trace", trace}};
}

}  // namespace cohom::wallach
