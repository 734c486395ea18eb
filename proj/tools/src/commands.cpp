#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cohom/cross/cross.hpp"
#include "cohom/geom/geom.hpp"
#include "cohom/triple/triple.hpp"
#include "cohom/wallach/wallach.hpp"
#include "render.hpp"

namespace cohom::cli {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw catalog::SchemaError(path, "cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw catalog::SchemaError(path, e.what());
  }
}

std::string md_finding(const triple::Finding& f) {
  return std::string(triple::to_string(f.verdict)) + " (" + f.rule + ": " + f.detail + ")";
}

}  // namespace

Report run_catalog(const catalog::Catalog& cat) {
  Report r;
  std::set<std::string> group_names;
  std::vector<std::vector<std::string>> groups, pairs, embeds, wallach;
  auto& j = r.json;
  j["sphere_transitive"] = nlohmann::json::array();
  for (const auto& p : cat.sphere_transitive()) {
    group_names.insert(p.group.name);
    group_names.insert(p.stabilizer.name);
    pairs.push_back({p.group.name, p.rep.name, lie::to_string(p.rep.reality), std::to_string(p.rep.real_dim()),
                     "S^" + std::to_string(p.sphere_dim), p.stabilizer.name, p.effective_quotient, p.anchor});
    j["sphere_transitive"].push_back({{"group", p.group.name},
                                      {"rep", p.rep.name},
                                      {"reality", lie::to_string(p.rep.reality)},
                                      {"real_dim", p.rep.real_dim()},
                                      {"sphere_dim", p.sphere_dim},
                                      {"stabilizer", p.stabilizer.name},
                                      {"effective_quotient", p.effective_quotient},
                                      {"anchor", p.anchor}});
  }
  j["embeddings"] = nlohmann::json::array();
  for (const auto& e : cat.embeddings()) {
    group_names.insert(e.ambient.name);
    group_names.insert(e.sub.name);
    embeds.push_back({e.name, e.ambient.name, e.sub.name, e.descriptor, e.rule ? "yes" : "no"});
    j["embeddings"].push_back({{"name", e.name},
                               {"ambient", e.ambient.name},
                               {"sub", e.sub.name},
                               {"descriptor", e.descriptor},
                               {"restriction_rule", e.rule.has_value()}});
  }
  j["wallach"] = nlohmann::json::array();
  for (const auto& w : cat.wallach()) {
    wallach.push_back({std::to_string(w.index), w.g1_template, w.h1_template, w.dim_text,
                       w.parametrised() ? "n >= " + std::to_string(w.n_min) : "-"});
    j["wallach"].push_back({{"index", w.index},
                            {"g1", w.g1_template},
                            {"h1", w.h1_template},
                            {"dim", w.dim_text},
                            {"n_min", w.n_min}});
  }
  j["groups"] = nlohmann::json::array();
  for (const auto& name : group_names) {
    const auto g = catalog::parse_group(name);
    groups.push_back({name, std::to_string(g.dimension()), std::to_string(g.rank())});
    j["groups"].push_back({{"name", name}, {"dim", g.dimension()}, {"rank", g.rank()}});
  }
  j["schema_checksum"] = catalog::schema_checksum();

  std::ostringstream os;
  os << "## Groups\n\n" << md_table({"group", "dim", "rank"}, groups);
  os << "\n## Sphere-transitive representations\n\n"
     << md_table({"G", "rep", "type", "dim V", "sphere", "stabilizer", "image", "anchor"}, pairs);
  os << "\n## Embeddings\n\n" << md_table({"tag", "ambient", "sub", "descriptor", "restriction rule"}, embeds);
  os << "\n## Positively curved homogeneous spaces G1/H1\n\n"
     << md_table({"row", "G1", "H1", "dim", "range"}, wallach);
  r.markdown = os.str();
  return r;
}

Report run_check_triple(const RunConfig& cfg, const catalog::Catalog& cat) {
  if (cfg.argument.empty()) throw Error("check-triple needs a triple file");
  const auto t = triple::triple_from_json(read_json(cfg.argument));
  Report r;
  const auto adm = triple::check_admissible(t, cat);
  r.json["triple"] = triple::triple_to_json(t);
  r.json["admissibility"] = adm;
  r.pass = adm.overall() != triple::CheckStatus::Fail;

  std::ostringstream os;
  os << "## " << t.name << "\n\n### Admissibility: " << triple::to_string(adm.overall()) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : adm.checks) rows.push_back({c.name, triple::to_string(c.status), c.detail});
  os << md_table({"check", "status", "detail"}, rows);

  if (r.pass) {
    auto m = triple::CohomOneManifold::from_triple(t);
    for (const char* which : {"B", "B'"}) {
      const auto orbit = m.orbit(which);
      m.record(which, triple::criterion_dimension_bound(orbit, m.dim_m));
      m.record(which, triple::criterion_kernel(orbit));
    }
    const auto euler = triple::criterion_euler(m);
    for (const auto& [which, f] : euler.marked) m.record(which, f);
    const int b = m.orbit("B").dim(), bp = m.orbit("B'").dim();
    const bool frankel = triple::frankel_check(b, bp, m.dim_m);
    r.json["manifold"] = m;
    r.json["euler"] = {{"precondition_ok", euler.precondition_ok}, {"bookkeeping", euler.bookkeeping}};
    r.json["frankel"] = {{"dim_B", b}, {"dim_B'", bp}, {"dim_M", m.dim_m}, {"holds", frankel}};

    os << "\n### Criteria\n\n- dim M = " << m.dim_m << ", regular orbits of dimension " << m.regular_orbit_dim << "\n";
    for (const auto& [which, f] : m.verdicts) os << "- " << which << ": " << md_finding(f) << "\n";
    os << "- Euler: " << euler.bookkeeping << "\n";
    os << "- dim B + dim B' < dim M: " << b << " + " << bp << " < " << m.dim_m << " is "
       << (frankel ? "true" : "false") << "\n";
  }
  r.markdown = os.str();
  return r;
}

namespace {

std::optional<cross::CrossKind> family_from_string(const std::string& s) {
  static const std::map<std::string, cross::CrossKind> names{
      {"sphere", cross::CrossKind::Sphere},           {"S", cross::CrossKind::Sphere},
      {"real_proj", cross::CrossKind::RealProj},      {"RP", cross::CrossKind::RealProj},
      {"complex_proj", cross::CrossKind::ComplexProj}, {"CP", cross::CrossKind::ComplexProj},
      {"quat_proj", cross::CrossKind::QuatProj},      {"HP", cross::CrossKind::QuatProj},
      {"cayley_plane", cross::CrossKind::CayleyPlane}, {"CaP", cross::CrossKind::CayleyPlane}};
  if (s.empty()) return std::nullopt;
  const auto it = names.find(s);
  if (it == names.end()) throw Error("unknown family '" + s + "' (sphere, real_proj, complex_proj, quat_proj, cayley_plane)");
  return it->second;
}

}  // namespace

Report run_classify_cross(const RunConfig& cfg, const catalog::Catalog& cat) {
  const auto family = family_from_string(cfg.argument);
  std::vector<cross::CrossCase> cases;
  for (const auto& c : cross::classified_spaces()) {
    if (family && c.kind != *family) continue;
    auto v = cross::classify_cross(c, cat);
    std::move(v.begin(), v.end(), std::back_inserter(cases));
  }
  Report r;
  r.json = {{"not_totally_geodesic", cross::exceptional_table_json(cases)}, {"cases", cross::cases_json(cases)}};
  r.markdown = cross::exceptional_table_markdown(cases);
  return r;
}

Report run_wallach(const RunConfig& cfg, const catalog::Catalog& cat) {
  Report r;
  if (cfg.input_path.empty()) {
    const auto rows = wallach::wallach_filter(cfg.wallach_n_max, cat);
    const int m = 4;
    const auto cands = wallach::su_row_candidates(m);
    const auto forced = wallach::forced_triple(m);
    r.json["rows"] = rows;
    r.json["su_candidates"] = {{"m", m}, {"rows", cands}};
    r.json["forced_triple"] = {{"H", forced.h}, {"K", forced.k}, {"H'", forced.h_prime},
                               {"twist", wallach::forced_twist(m)}};
    std::ostringstream os;
    os << "## Rows after the ideal test and the second-orbit search\n\n" << wallach::wallach_table_markdown(rows);
    os << "\n## Candidates for h' with G1 = SU(" << m << ")\n\n" << wallach::candidate_table_markdown(cands);
    os << "\nForced triple: H = " << forced.h << ", K = " << forced.k << ", H' = " << forced.h_prime
       << ", twist j = " << wallach::forced_twist(m) << "\n";
    r.markdown = os.str();
    return r;
  }
  auto j = read_json(cfg.input_path);
  bool curved = true;
  if (j.contains("positive_curvature")) {
    if (!j["positive_curvature"].is_boolean())
      throw catalog::SchemaError(cfg.input_path, "positive_curvature must be a boolean");
    curved = j["positive_curvature"].get<bool>();
    j.erase("positive_curvature");
  }
  const auto t = triple::triple_from_json(j);
  const auto v = wallach::classify_positive_curvature({triple::CohomOneManifold::from_triple(t), curved}, cat);
  r.json = {{"triple", t.name}, {"verdict", v}};
  std::ostringstream os;
  os << "## " << t.name << "\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& g : v.trace) rows.push_back({g.gate, g.outcome, g.rule});
  os << md_table({"gate", "outcome", "rule"}, rows);
  os << "\nResult: " << wallach::to_string(v.diffeo_type);
  if (!v.model.empty()) os << " (" << v.model << ")";
  os << ", rule " << v.rule_used << "\n";
  r.markdown = os.str();
  return r;
}

Report run_verify_geometry(const RunConfig& cfg) {
  geom::Tolerances tol;
  for (const auto& [name, value] : cfg.tolerances) tol.set(name, value);
  auto ids = cfg.models;
  if (!cfg.argument.empty()) ids.push_back(cfg.argument);
  const auto suite = geom::load_models(cfg.models_path.empty() ? geom::default_models_path() : cfg.models_path);
  const auto s = geom::run_geometry_suite(suite, ids, tol);

  if (!cfg.csv_dir.empty()) {
    std::filesystem::create_directories(cfg.csv_dir);
    for (const auto& [key, csv] : s.csv) {
      auto file = key;
      std::replace(file.begin(), file.end(), '/', '_');
      std::ofstream(std::filesystem::path(cfg.csv_dir) / (file + ".csv")) << csv;
    }
  }
  Report r;
  r.json = s.report;
  r.pass = s.pass;
  std::ostringstream os;
  os << "## Geometry checks: " << (s.pass ? "pass" : "FAIL") << "\n\n### Tolerances\n\n"
     << md_fields(s.report["tolerances"]);
  for (const auto& res : s.report["results"]) {
    os << "\n### " << plain(res["id"]) << "\n\n";
    auto fields = res;
    fields.erase("id");
    os << md_fields(fields);
  }
  for (const auto& f : s.failures) os << "\nFAILED " << f << "\n";
  r.markdown = os.str();
  return r;
}

int run(const RunConfig& cfg) {
  Report r;
  try {
    std::optional<catalog::Catalog> cat;
    if (cfg.command != Command::VerifyGeometry)
      cat = catalog::Catalog::load(cfg.catalog_path.empty() ? catalog::Catalog::default_path() : cfg.catalog_path);
    switch (cfg.command) {
      case Command::Catalog: r = run_catalog(*cat); break;
      case Command::CheckTriple: r = run_check_triple(cfg, *cat); break;
      case Command::ClassifyCross: r = run_classify_cross(cfg, *cat); break;
      case Command::Wallach: r = run_wallach(cfg, *cat); break;
      case Command::VerifyGeometry: r = run_verify_geometry(cfg); break;
    }
  } catch (const catalog::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto text = cfg.format == Format::Json ? r.json.dump(2) + "\n" : r.markdown;
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out_path << "\n";
      return 1;
    }
    out << text;
  }
  return r.pass ? 0 : 1;
}

}  // namespace cohom::cli
