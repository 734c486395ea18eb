#include "cohom/triple/triple.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace cohom::triple {

using catalog::SchemaError;
using lie::Weight;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

CheckStatus AdmissibilityReport::overall() const {
  bool open = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    open = open || c.status == CheckStatus::Inconclusive;
  }
  return open ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

SliceRep make_slice(const CompactGroupSpec& h, std::string rep_name, const std::vector<Weight>& highest_weights,
                    lie::Reality reality, std::string kernel) {
  SliceRep s;
  s.stabilizer = h;
  s.kernel = std::move(kernel);
  if (highest_weights.empty()) {
    s.rep.name = std::move(rep_name);
    s.rep.group = h;
    s.rep.character = lie::Character(h.algebra);
    s.rep.reality = reality;
  } else {
    s.rep = catalog::make_rep(std::move(rep_name), h, highest_weights, reality);
  }
  s.normal_dim = s.rep.real_dim();
  return s;
}

namespace {

Check inclusion_check(const std::string& name, const std::optional<Inclusion>& inc, const CompactGroupSpec& big,
                      const CompactGroupSpec& k, const catalog::Catalog& cat) {
  Check c{name, CheckStatus::Inconclusive, ""};
  if (k.dimension() > big.dimension() || k.rank() > big.rank()) {
    c.status = CheckStatus::Fail;
    c.detail = k.name + " is larger than " + big.name;
    return c;
  }
  if (!inc) {
    c.detail = "missing embedding data for " + k.name + " in " + big.name;
    return c;
  }
  if (!inc->catalog_tag.empty()) {
    const auto* tag = cat.embedding(inc->catalog_tag);
    if (!tag) {
      c.detail = "embedding tag '" + inc->catalog_tag + "' not in catalog";
      return c;
    }
    const bool match = tag->ambient.algebra.canonical() == big.algebra.canonical() &&
                       tag->sub.algebra.canonical() == k.algebra.canonical();
    c.status = match ? CheckStatus::Pass : CheckStatus::Fail;
    c.detail = "catalog tag " + tag->name + (match ? "" : " has different algebras");
    return c;
  }
  c.status = CheckStatus::Pass;
  c.detail = "asserted: " + inc->descriptor;
  return c;
}

Check sphere_check(const std::string& name, const CompactGroupSpec& big, const CompactGroupSpec& k,
                   const SliceRep& s) {
  const int quotient = big.dimension() - k.dimension();
  Check c{name, CheckStatus::Fail, ""};
  c.detail = "dim " + big.name + "/" + k.name + " = " + std::to_string(quotient) + ", normal dim " +
             std::to_string(s.normal_dim);
  if (s.normal_dim >= 1 && quotient == s.normal_dim - 1) c.status = CheckStatus::Pass;
  return c;
}

Check transitivity_check(const std::string& name, const SliceRep& s, const catalog::Catalog& cat) {
  Check c{name, CheckStatus::Fail, ""};
  if (s.normal_dim < 2) {
    c.detail = "no connected group is transitive on S^" + std::to_string(s.normal_dim - 1);
    return c;
  }
  if (s.rep.character.algebra() != s.stabilizer.algebra) {
    c.detail = "slice character is not over the stabilizer algebra";
    return c;
  }
  const auto target = s.rep.complexified();
  for (const auto& cand : cat.sphere_transitive_candidates(s.stabilizer)) {
    if (cand.lifted.complexified() == target) {
      c.status = CheckStatus::Pass;
      c.detail = cand.pair.group.name + " " + cand.pair.rep.name + " on S^" + std::to_string(cand.pair.sphere_dim) +
                 " via " + cand.factor_map;
      return c;
    }
  }
  c.detail = "no sphere-transitive catalog pair matches";
  return c;
}

}  // namespace

AdmissibilityReport check_admissible(const AdmissibleTriple& t, const catalog::Catalog& cat) {
  AdmissibilityReport r;
  r.checks.push_back(inclusion_check("K in H", t.k_in_h, t.h, t.k, cat));
  r.checks.push_back(inclusion_check("K in H'", t.k_in_h_prime, t.h_prime, t.k, cat));
  r.checks.push_back(sphere_check("H/K sphere", t.h, t.k, t.slice_h));
  r.checks.push_back(sphere_check("H'/K sphere", t.h_prime, t.k, t.slice_h_prime));
  r.checks.push_back(transitivity_check("H slice transitive", t.slice_h, cat));
  r.checks.push_back(transitivity_check("H' slice transitive", t.slice_h_prime, cat));
  const int a = t.dim_m_from_h(), b = t.dim_m_from_h_prime();
  r.checks.push_back({"dim M consistent", a == b ? CheckStatus::Pass : CheckStatus::Fail,
                      std::to_string(a) + " vs " + std::to_string(b)});
  return r;
}

CohomOneManifold CohomOneManifold::from_triple(AdmissibleTriple t) {
  CohomOneManifold m;
  const int a = t.dim_m_from_h(), b = t.dim_m_from_h_prime();
  if (a != b) throw Error(t.name + ": dim M is " + std::to_string(a) + " from H but " + std::to_string(b) + " from H'");
  m.dim_m = a;
  m.regular_orbit_dim = t.group.dimension() - t.k.dimension();
  if (m.regular_orbit_dim != m.dim_m - 1) throw Error(t.name + ": regular orbits are not hypersurfaces");
  m.triple = std::move(t);
  return m;
}

HomogeneousSpace CohomOneManifold::orbit(const std::string& which) const {
  if (which != "B" && which != "B'") throw Error("orbit must be B or B'");
  HomogeneousSpace x;
  x.group = triple.group;
  x.stabilizer = which == "B" ? triple.h : triple.h_prime;
  x.name = x.group.name + "/" + x.stabilizer.name;
  x.isotropy.group = x.stabilizer;
  x.isotropy.character = lie::Character(x.stabilizer.algebra);
  return x;
}

void CohomOneManifold::record(const std::string& which, const Finding& f) {
  auto it = verdicts.find(which);
  if (it == verdicts.end())
    verdicts.emplace(which, f);
  else
    it->second = merge(it->second, f);
}

Finding dimension_bound(int orbit_dim, int dim_m, int k) {
  const auto detail = "2*" + std::to_string(orbit_dim) + " < " + std::to_string(dim_m) + " + " + std::to_string(k) +
                      " - 1";
  if (2 * orbit_dim < dim_m + k - 1) return {Verdict::TotallyGeodesic, "dimension-bound", detail};
  return Finding::inconclusive("dimension-bound", "fails: " + detail);
}

Finding criterion_dimension_bound(const HomogeneousSpace& orbit, int dim_m) {
  const auto k = homogeneous::cohomogeneity_on_self(orbit);
  if (!k) return Finding::inconclusive("dimension-bound", "cohomogeneity of " + orbit.name + " unknown");
  return dimension_bound(orbit.dim(), dim_m, *k);
}

std::optional<int> kernel_ideal_dim(const HomogeneousSpace& orbit) {
  if (orbit.dim() == 0) return orbit.group.dimension();
  if (orbit.isotropy.real_dim() == orbit.dim() && orbit.isotropy.character.algebra() == orbit.stabilizer.algebra) {
    const auto tau = orbit.isotropy.complexified();
    const auto& alg = orbit.stabilizer.algebra;
    int out = 0;
    for (std::size_t b = 0; b < alg.simples.size(); ++b) {
      const int lo = alg.offset(b), hi = lo + alg.simples[b].rank;
      bool trivial = true;
      for (const auto& [w, m] : tau.weights())
        for (int i = lo; i < hi; ++i) trivial = trivial && w[i] == 0;
      if (trivial) out += alg.simples[b].dimension();
    }
    if (alg.torus_rank > 0) {
      const int t0 = alg.offset(alg.simples.size());
      Eigen::MatrixXd charges(static_cast<Eigen::Index>(tau.weights().size()), alg.torus_rank);
      Eigen::Index row = 0;
      for (const auto& [w, m] : tau.weights()) {
        for (int j = 0; j < alg.torus_rank; ++j) charges(row, j) = w[t0 + j];
        ++row;
      }
      out += alg.torus_rank - static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(charges).rank());
    }
    return out;
  }
  if (orbit.stabilizer.rank() == orbit.group.rank() && orbit.group.algebra.torus_rank > 0)
    return orbit.group.algebra.torus_rank;
  return std::nullopt;
}

Finding criterion_kernel(const HomogeneousSpace& orbit) {
  const auto d = kernel_ideal_dim(orbit);
  if (!d) return Finding::inconclusive("kernel-ideal", "no isotropy data for " + orbit.name);
  const auto detail = "ideal of dimension " + std::to_string(*d) + " inside " + orbit.stabilizer.name;
  if (*d > 0) return {Verdict::TotallyGeodesic, "kernel-ideal", detail};
  return Finding::inconclusive("kernel-ideal", detail);
}

EulerReport criterion_euler(const CohomOneManifold& m) {
  EulerReport r;
  if (m.triple.group.algebra.semisimple()) {
    r.bookkeeping = "precondition fails: " + m.triple.group.name + " is semisimple";
    return r;
  }
  r.precondition_ok = true;
  const auto b = m.orbit("B"), bp = m.orbit("B'");
  r.chi_b = homogeneous::euler_positive(b);
  r.chi_b_prime = homogeneous::euler_positive(bp);
  auto sign = [](bool p) { return p ? "> 0" : "= 0"; };
  r.bookkeeping = std::string("chi(M) = chi(B) + chi(B'), chi(B) ") + sign(r.chi_b) + ", chi(B') " + sign(r.chi_b_prime);
  if (!r.chi_b && !r.chi_b_prime) {
    r.bookkeeping += "; chi(M) <= 0 scenario";
    return r;
  }
  if (r.chi_b) r.marked["B"] = criterion_kernel(b);
  if (r.chi_b_prime) r.marked["B'"] = criterion_kernel(bp);
  return r;
}

bool frankel_check(int b1_dim, int b2_dim, int dim_m) { return b1_dim + b2_dim < dim_m; }

void to_json(nlohmann::json& j, const AdmissibilityReport& r) {
  j = nlohmann::json{{"overall", to_string(r.overall())}, {"checks", nlohmann::json::array()}};
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
}

void to_json(nlohmann::json& j, const CohomOneManifold& m) {
  j = nlohmann::json{{"triple", m.triple.name},
                     {"dim_m", m.dim_m},
                     {"regular_orbit_dim", m.regular_orbit_dim},
                     {"verdicts", nlohmann::json::object()}};
  for (const auto& [k, f] : m.verdicts) j["verdicts"][k] = f;
}

namespace {

const nlohmann::json& field(const nlohmann::json& j, const std::string& key, const std::string& record) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(record, "missing field '" + key + "'");
  return j.at(key);
}

CompactGroupSpec group_field(const nlohmann::json& j, const std::string& key, const std::string& record) {
  try {
    return catalog::parse_group(field(j, key, record).get<std::string>());
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(record + "." + key, e.what());
  }
}

SliceRep slice_field(const nlohmann::json& j, const std::string& key, const CompactGroupSpec& h) {
  const auto record = "triple." + key;
  const auto& s = field(j, key, "triple");
  try {
    std::vector<Weight> hws;
    for (const auto& w : field(s, "highest_weights", record)) hws.emplace_back(w.get<std::vector<int>>());
    return make_slice(h, s.value("rep_name", "slice"), hws,
                      lie::reality_from_string(field(s, "reality", record).get<std::string>()), s.value("kernel", "1"));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(record, e.what());
  }
}

std::optional<Inclusion> inclusion_field(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) return std::nullopt;
  const auto& v = j.at(key);
  return Inclusion{v.value("descriptor", ""), v.value("catalog_tag", "")};
}

nlohmann::json slice_json(const SliceRep& s) {
  nlohmann::json hws = nlohmann::json::array();
  for (const auto& [w, m] : lie::decompose(s.rep.character))
    for (std::int64_t i = 0; i < m; ++i) hws.push_back(w.c);
  return {{"rep_name", s.rep.name}, {"highest_weights", hws}, {"reality", lie::to_string(s.rep.reality)},
          {"kernel", s.kernel}};
}

}  // namespace

AdmissibleTriple triple_from_json(const nlohmann::json& j) {
  AdmissibleTriple t;
  t.name = j.value("name", "triple");
  t.group = group_field(j, "group", "triple");
  t.h = group_field(j, "h", "triple");
  t.k = group_field(j, "k", "triple");
  t.h_prime = group_field(j, "h_prime", "triple");
  t.slice_h = slice_field(j, "slice_h", t.h);
  t.slice_h_prime = slice_field(j, "slice_h_prime", t.h_prime);
  t.k_in_h = inclusion_field(j, "k_in_h");
  t.k_in_h_prime = inclusion_field(j, "k_in_h_prime");
  return t;
}

nlohmann::json triple_to_json(const AdmissibleTriple& t) {
  nlohmann::json j{{"name", t.name},          {"group", t.group.name},
                   {"h", t.h.name},           {"k", t.k.name},
                   {"h_prime", t.h_prime.name}, {"slice_h", slice_json(t.slice_h)},
                   {"slice_h_prime", slice_json(t.slice_h_prime)}};
  if (t.k_in_h) j["k_in_h"] = {{"descriptor", t.k_in_h->descriptor}, {"catalog_tag", t.k_in_h->catalog_tag}};
  if (t.k_in_h_prime)
    j["k_in_h_prime"] = {{"descriptor", t.k_in_h_prime->descriptor}, {"catalog_tag", t.k_in_h_prime->catalog_tag}};
  return j;
}

}  // namespace cohom::triple
