#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cohom/geom/geom.hpp"

namespace cohom::geom {

void Tolerances::set(const std::string& name, double value) {
  if (!(value >= 1e-12 && value <= 1e-2))
    throw GeometryError("tolerance " + name + " must lie in [1e-12, 1e-2]");
  if (name == "sff") sff = value;
  else if (name == "identity") identity = value;
  else if (name == "geodesic") geodesic = value;
  else if (name == "flat") flat = value;
  else if (name == "step_halving") step_halving = value;
  else throw GeometryError("unknown tolerance '" + name + "'");
}

std::string default_models_path() { return std::string(COHOM_DEFAULT_DATA_DIR) + "/models.json"; }

nlohmann::json load_models(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(path + ": " + e.what());
  }
}

namespace {

Vec parse_point(const ModelGeometry& m, const nlohmann::json& j) {
  Vec x;
  auto diag = [&](const nlohmann::json& d, std::complex<double> unit) {
    CMat z = CMat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = unit * d[i].get<double>();
    return m.coords(z);
  };
  if (j.contains("vector")) {
    const auto v = j["vector"].get<std::vector<double>>();
    x = Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
  } else if (j.contains("diag")) {
    x = diag(j["diag"], 1);
  } else if (j.contains("diag_imag")) {
    x = diag(j["diag_imag"], {0, 1});
  } else if (j.contains("projector")) {
    const auto re = j["projector"]["re"].get<std::vector<double>>(), im = j["projector"]["im"].get<std::vector<double>>();
    Eigen::VectorXcd v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Eigen::Index>(i)) = {re[i], im.at(i)};
    v.normalize();
    x = m.coords(v * v.adjoint());
  } else {
    throw GeometryError("point needs one of vector, diag, diag_imag, projector");
  }
  if (j.value("normalize", false)) x.normalize();
  return x;
}

ModelGeometry restrict_generators(ModelGeometry m, const std::vector<int>& keep) {
  ModelGeometry r = m;
  r.generators.clear();
  r.generator_names.clear();
  for (int i : keep) {
    r.generators.push_back(m.generators.at(static_cast<std::size_t>(i)));
    r.generator_names.push_back(m.generator_names.at(static_cast<std::size_t>(i)));
  }
  return r;
}

std::vector<std::vector<Vec>> unit_blocks(const nlohmann::json& blocks, std::size_t n) {
  std::vector<std::vector<Vec>> out;
  for (const auto& b : blocks) {
    std::vector<Vec> frame;
    for (int i : b.get<std::vector<int>>()) {
      Vec c = Vec::Zero(static_cast<Eigen::Index>(n));
      c(i) = 1;
      frame.push_back(c);
    }
    out.push_back(std::move(frame));
  }
  return out;
}

void check(SuiteResult& s, nlohmann::json& r, const std::string& id, const std::string& what, bool ok) {
  r["checks"][what] = ok;
  if (!ok) {
    s.pass = false;
    s.failures.push_back(id + ": " + what);
  }
}

nlohmann::json shape_json(const ShapeReport& sr) {
  return {{"ok", sr.ok}, {"off_block_max", sr.off_block_max}, {"scalar_deviation", sr.scalar_deviation},
          {"block_eigenvalues", sr.block_eigenvalues}};
}

void run_orbit(SuiteResult& s, const nlohmann::json& c, const Tolerances& tol, nlohmann::json& r) {
  const auto id = c.at("id").get<std::string>();
  const auto m = builtin_model(c["model"].at("builtin"), c["model"].value("params", nlohmann::json::object()));
  const auto p = make_orbit_point(m, parse_point(m, c.at("point")));
  const int dim = c.value("orbit_dim", -1);
  const auto sff = second_fundamental_form_norm(p, 1e-4, dim);
  const auto tg = totally_geodesic_test(p, tol.sff);
  const bool expect = c.at("expect_totally_geodesic").get<bool>();
  r["orbit_dim"] = sff.orbit_dim;
  r["sff_norm"] = sff.norm;
  r["sff_norm_half_step"] = sff.norm_half_step;
  r["sampled_norms"] = tg.norms;
  r["totally_geodesic"] = tg.totally_geodesic;
  check(s, r, id, "totally_geodesic matches", tg.totally_geodesic == expect);
  const double change = std::abs(sff.norm - sff.norm_half_step);
  check(s, r, id, "step halving", change <= std::max(10 * tol.sff, tol.step_halving * sff.norm));
  if (!expect) check(s, r, id, "norm above 100x tolerance", sff.norm > 100 * tol.sff);
}

void run_profile(SuiteResult& s, const nlohmann::json& c, const Tolerances& tol, nlohmann::json& r) {
  const auto id = c.at("id").get<std::string>();
  const auto m = builtin_model(c["model"].at("builtin"), c["model"].value("params", nlohmann::json::object()));
  const Vec x = parse_point(m, c.at("point"));
  const Vec v = parse_point(m, c.at("direction"));
  const auto g = integrate_geodesic(m, x, v, c.value("t_max", 3.0), c.value("dt", 1e-3));
  r["geodesic_residual"] = g.max_residual;
  r["constraint_drift"] = g.max_drift;
  check(s, r, id, "geodesic residual", g.max_residual < tol.geodesic);
  const auto expect = c.value("expect_f_dd", std::string("none"));
  const double f_min = c.value("f_min", 0.1);
  for (int gi : c.at("generators").get<std::vector<int>>()) {
    const auto k = killing_norm_profile(g, gi, tol.sff);
    nlohmann::json kj{{"generator", k.generator}, {"identity_residual", k.max_identity_residual}};
    check(s, r, id, k.generator + " identity residual", k.max_identity_residual < tol.identity);
    if (expect == "negative") {
      kj["max_f_dd_above_f_min"] = k.max_f_dd_above(f_min);
      check(s, r, id, k.generator + " f'' < 0 where f > " + std::to_string(f_min).substr(0, 4), k.max_f_dd_above(f_min) < 0);
    } else if (expect == "zero") {
      kj["max_abs_f_dd"] = k.max_abs_f_dd();
      check(s, r, id, k.generator + " f'' = 0", k.max_abs_f_dd() < tol.flat);
    }
    r["profiles"].push_back(kj);
    s.csv[id + "/" + k.generator] = profile_csv(k);
  }
  if (!c.contains("blocks")) return;
  ShapeReport sr;
  if (c.contains("shape_at")) {
    const auto i = static_cast<std::size_t>(std::llround(c["shape_at"].get<double>() / g.dt));
    const auto& sample = g.samples.at(i);
    const auto p = make_orbit_point(m, sample.x);
    sr = shape_operator_block_check(p, sample.v, unit_blocks(c["blocks"], m.generators.size()), tol.sff);
  } else {
    const auto sub = restrict_generators(m, c.at("shape_generators").get<std::vector<int>>());
    const auto p = make_orbit_point(sub, parse_point(sub, c.at("shape_point")));
    sr = shape_operator_block_check(p, parse_point(sub, c.at("shape_normal")),
                                    unit_blocks(c["blocks"], sub.generators.size()), tol.sff);
    check(s, r, id, "shape operator vanishes", sr.block_eigenvalues.size() && std::abs(sr.block_eigenvalues[0][0]) < tol.sff);
  }
  r["shape"] = shape_json(sr);
  check(s, r, id, "shape operator block-diagonal", sr.ok);
}

}  // namespace

SuiteResult run_geometry_suite(const nlohmann::json& suite, const std::vector<std::string>& ids, const Tolerances& tol) {
  SuiteResult s;
  const auto& checks = suite.at("checks");
  for (const auto& want : ids) {
    const bool known = std::any_of(checks.begin(), checks.end(), [&](const auto& c) { return c.at("id") == want; });
    if (!known) throw GeometryError("unknown model check '" + want + "'");
  }
  s.report["tolerances"] = {{"sff", tol.sff}, {"identity", tol.identity}, {"geodesic", tol.geodesic},
                            {"flat", tol.flat}, {"step_halving", tol.step_halving}};
  s.report["results"] = nlohmann::json::array();
  for (const auto& c : checks) {
    const auto id = c.at("id").get<std::string>();
    if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    nlohmann::json r{{"id", id}, {"kind", c.at("kind")}};
    try {
      if (c["kind"] == "orbit")
        run_orbit(s, c, tol, r);
      else if (c["kind"] == "profile")
        run_profile(s, c, tol, r);
      else
        throw GeometryError("unknown check kind");
    } catch (const std::exception& e) {
      r["error"] = e.what();
      s.pass = false;
      s.failures.push_back(id + ": " + e.what());
    }
    s.report["results"].push_back(r);
  }
  s.report["pass"] = s.pass;
  return s;
}

}  // namespace cohom::geom
