#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cohom/cross/cross.hpp"

namespace cohom::cross {

namespace {

bool is_circle_case(const CrossSpace& c, const SliceCandidate& s) {
  return (c.kind == CrossKind::Sphere || c.kind == CrossKind::RealProj) && c.n == 2 && s.pair.rfind("SO(2)", 0) == 0;
}

Finding decide(const CrossSpace& c, const SliceCandidate& s, CrossCase& out) {
  SliceRep tau{c.presentation.stabilizer, c.presentation.isotropy, c.presentation.dim(), {}};
  if (real_equivalent(s.nu, tau)) return isotropy_slice_check(c);

  auto bound = triple::dimension_bound(c.presentation.dim(), out.dim_m, 1);
  if (bound.decided()) return bound;

  if (is_circle_case(c, s)) {
    auto f = sigma_parity_check(s.twist);
    if (f.decided()) return f;
  }
  if (out.containment) {
    const auto ob = containment_obstruction(*out.containment);
    if (ob.obstructed)
      return {Verdict::TotallyGeodesic, "containment-" + ob.rule,
              out.containment->h_v.name + " not in a conjugate of " + out.containment->k.name + ": " + ob.detail};
  }
  if (out.witness) return {Verdict::NotTotallyGeodesic, "witness-model", out.witness->model};
  return Finding::inconclusive("unresolved", "no rule decides " + s.pair + " (" + s.factor_map + ")");
}

}  // namespace

std::vector<CrossCase> classify_cross(const CrossSpace& c, const catalog::Catalog& cat) {
  std::vector<CrossCase> out;
  for (auto& s : enumerate_slice_candidates(c, cat)) {
    CrossCase cc;
    cc.cross = c;
    cc.dim_m = c.presentation.dim() + s.nu.normal_dim;
    cc.containment = containment_question(c, s);
    cc.witness = witness_for(c, s);
    cc.candidate = std::move(s);
    cc.verdict = decide(c, cc.candidate, cc);
    if (cc.verdict.verdict == Verdict::NotTotallyGeodesic && !cc.witness)
      throw Error("non totally geodesic case without witness: " + c.label());
    out.push_back(std::move(cc));
  }
  return out;
}

std::vector<CrossSpace> classified_spaces() {
  auto all = homogeneous::cross_catalog();
  std::erase_if(all, [](const CrossSpace& c) {
    return c.n == 1 && (c.kind == CrossKind::ComplexProj || c.kind == CrossKind::QuatProj);
  });
  return all;
}

std::vector<CrossCase> classify_all(const catalog::Catalog& cat) {
  std::vector<CrossCase> out;
  for (const auto& c : classified_spaces()) {
    auto v = classify_cross(c, cat);
    std::move(v.begin(), v.end(), std::back_inserter(out));
  }
  return out;
}

namespace {

std::vector<const CrossCase*> exceptional(const std::vector<CrossCase>& cases) {
  std::vector<const CrossCase*> v;
  for (const auto& c : cases)
    if (c.verdict.verdict == Verdict::NotTotallyGeodesic) v.push_back(&c);
  return v;
}

}  // namespace

std::string exceptional_table_markdown(const std::vector<CrossCase>& cases) {
  std::ostringstream os;
  os << "| G/H | G | H | M | ν | provenance |\n";
  os << "|---|---|---|---|---|---|\n";
  bool s2 = false, rp2 = false;
  for (const auto* c : exceptional(cases)) {
    const auto& w = *c->witness;
    os << "| " << w.space << " | " << w.group << " | " << w.stabilizer << " | " << w.manifold << " | " << w.nu
       << " | " << c->verdict.rule << ": " << w.model << " |\n";
    s2 |= c->cross.kind == CrossKind::Sphere && c->cross.n == 2;
    rp2 |= c->cross.kind == CrossKind::RealProj && c->cross.n == 2;
  }
  if (s2 && rp2)
    os << "\nNote: S^2 and RP^2 both appear; in each the exceptional orbit comes from the degree-2 circle slice.\n";
  return os.str();
}

nlohmann::json exceptional_table_json(const std::vector<CrossCase>& cases) {
  auto rows = nlohmann::json::array();
  for (const auto* c : exceptional(cases)) {
    const auto& w = *c->witness;
    rows.push_back({{"space", w.space},
                    {"G", w.group},
                    {"H", w.stabilizer},
                    {"M", w.manifold},
                    {"nu", w.nu},
                    {"model", w.model},
                    {"dim_M", w.manifold_dim},
                    {"provenance", c->verdict.rule}});
  }
  return rows;
}

nlohmann::json cases_json(const std::vector<CrossCase>& cases) {
  auto rows = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json r{{"space", c.cross.label()},
                     {"candidate", c.candidate.pair},
                     {"factor_map", c.candidate.factor_map},
                     {"twist", c.candidate.twist},
                     {"normal_dim", c.candidate.nu.normal_dim},
                     {"dim_M", c.dim_m},
                     {"verdict", c.verdict}};
    if (!c.candidate.identified.empty()) r["identified"] = c.candidate.identified;
    if (c.containment) r["containment"] = {{"H_v", c.containment->h_v.name}, {"K", c.containment->k.name}};
    if (c.witness) r["witness"] = c.witness->model;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace cohom::cross
