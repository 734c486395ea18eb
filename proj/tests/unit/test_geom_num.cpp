#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "cohom/geom/geom.hpp"

using namespace cohom;
using namespace cohom::geom;

namespace {

const nlohmann::json& oracle() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(COHOM_TEST_DIR) + "/fixtures/geom_oracle.json");
    return nlohmann::json::parse(in);
  }();
  return j;
}

// Three significant digits.
void expect_close(double got, double want) { EXPECT_NEAR(got, want, 5e-4 * std::abs(want)) << want; }

CMat diag(std::vector<std::complex<double>> d) {
  CMat m = CMat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Vec unit_coords(const ModelGeometry& m, const CMat& z) { return m.coords(z).normalized(); }

Vec projector(const ModelGeometry& m, Eigen::Vector3cd v) {
  v.normalize();
  return m.coords(v * v.adjoint());
}

std::vector<ModelGeometry> all_models() {
  return {s4_symmetric(), round_sphere(4, 4), cp2_projectors("SO(3)"), cp2_projectors("SU(3)"), s7_su3(), flat_torus()};
}

Vec random_point(const ModelGeometry& m, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  Vec x(m.ambient_dim);
  for (auto& v : x) v = nd(rng);
  if (m.name == "cp2-projectors") {
    Eigen::Vector3cd w;
    for (auto& c : w) c = {nd(rng), nd(rng)};
    return projector(m, w);
  }
  if (m.name == "flat-torus") {
    x.head(2).normalize();
    x.tail(2).normalize();
    return x;
  }
  return x.normalized();
}

}  // namespace

TEST(Models, RegularLevelSetsWithTangentGenerators) {
  std::mt19937 rng(3);
  for (const auto& m : all_models())
    for (int i = 0; i < 5; ++i) {
      const Vec x = random_point(m, rng);
      EXPECT_LT(m.residual(x).lpNorm<Eigen::Infinity>(), 1e-12) << m.name;
      Eigen::JacobiSVD<Mat> svd(m.jacobian(x));
      const auto& s = svd.singularValues();
      int rank = 0;
      for (Eigen::Index k = 0; k < s.size(); ++k) rank += s(k) > 1e-9 * s(0);
      EXPECT_EQ(rank, m.ambient_dim - m.dim) << m.name;
      EXPECT_NO_THROW(make_orbit_point(m, x)) << m.name;
      for (const auto& g : m.generators) EXPECT_LT((g + g.transpose()).norm(), 1e-12) << m.name;
    }
}

TEST(Models, RejectsBadInput) {
  const auto m = s4_symmetric();
  EXPECT_THROW(make_orbit_point(m, Vec::Ones(5)), GeometryError);
  EXPECT_THROW(make_orbit_point(m, Vec::Ones(3)), GeometryError);
  auto broken = round_sphere(4, 4);
  broken.generators[0](0, 0) = 1;  // radial component
  Vec e1 = Vec::Zero(5);
  e1(0) = 1;
  EXPECT_THROW(make_orbit_point(broken, e1), GeometryError);
  EXPECT_THROW(builtin_model("nope", {}), GeometryError);
  EXPECT_THROW(round_sphere(4, 7), GeometryError);
}

TEST(SecondFundamentalForm, OracleValues) {
  const auto s4 = s4_symmetric();
  const auto ver = make_orbit_point(s4, unit_coords(s4, diag({1, 1, -2})));
  expect_close(second_fundamental_form_norm(ver, 1e-4, 2).norm, oracle()["veronese_rp2_s4"]);
  const auto cp = cp2_projectors("SO(3)");
  const auto o = make_orbit_point(cp, projector(cp, {1, 0, {0, 1}}));
  expect_close(second_fundamental_form_norm(o, 1e-4, 2).norm, oracle()["orbit_10i_cp2"]);
  const auto s7 = s7_su3();
  const auto c = make_orbit_point(s7, unit_coords(s7, diag({{0, 1}, {0, 1}, {0, -2}})));
  expect_close(second_fundamental_form_norm(c, 1e-4, 4).norm, oracle()["cp2_in_s7"]);
  EXPECT_LT(oracle()["real_rp2_cp2_max"].get<double>(), 1e-12);
}

TEST(SecondFundamentalForm, RealPointsOfCp2AreTotallyGeodesic) {
  const auto cp = cp2_projectors("SO(3)");
  std::mt19937 rng(10);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 10; ++i) {
    const auto p = make_orbit_point(cp, projector(cp, {nd(rng), nd(rng), nd(rng)}));
    EXPECT_EQ(p.orbit_dim, 2);
    EXPECT_LT(second_fundamental_form_norm(p).norm, 1e-6);
  }
}

TEST(SecondFundamentalForm, StepHalvingAndRankChecks) {
  const auto s4 = s4_symmetric();
  const auto p = make_orbit_point(s4, unit_coords(s4, diag({1, 1, -2})));
  const auto r = second_fundamental_form_norm(p);
  EXPECT_LT(std::abs(r.norm - r.norm_half_step), 1e-6);
  EXPECT_THROW(second_fundamental_form_norm(p, 1e-4, 3), GeometryError);
  // A regular point has a 3-dimensional orbit.
  EXPECT_EQ(make_orbit_point(s4, unit_coords(s4, diag({1, 2, -3}))).orbit_dim, 3);
}

TEST(SecondFundamentalForm, GaugeInvariance) {
  std::mt19937 rng(4);
  std::normal_distribution<double> nd;
  for (auto m : {s4_symmetric(), cp2_projectors("SO(3)"), s7_su3()}) {
    const Vec x = m.name == "cp2-projectors" ? projector(m, {1, 0, {0, 1}})
                  : m.name == "s7-su3"       ? unit_coords(m, diag({{0, 1}, {0, 1}, {0, -2}}))
                                             : unit_coords(m, diag({1, 1, -2}));
    const double base = second_fundamental_form_norm(make_orbit_point(m, x)).norm;
    // Move by a group element.
    Vec c(static_cast<Eigen::Index>(m.generators.size()));
    for (auto& v : c) v = nd(rng);
    const Vec y = m.project(m.group_element(c) * x);
    EXPECT_NEAR(second_fundamental_form_norm(make_orbit_point(m, y)).norm, base, 1e-6) << m.name;
    // Re-choose the generator basis.
    auto mixed = m;
    const auto n = m.generators.size();
    for (std::size_t i = 0; i < n; ++i) {
      mixed.generators[i] = Mat::Zero(m.ambient_dim, m.ambient_dim);
      for (std::size_t j = 0; j < n; ++j) mixed.generators[i] += nd(rng) * m.generators[j];
    }
    EXPECT_NEAR(second_fundamental_form_norm(make_orbit_point(mixed, x)).norm, base, 1e-6) << m.name;
  }
}

TEST(TotallyGeodesic, Examples) {
  const auto s4 = s4_symmetric();
  EXPECT_FALSE(totally_geodesic_test(make_orbit_point(s4, unit_coords(s4, diag({1, 1, -2}))), 1e-6).totally_geodesic);
  const auto sp = round_sphere(4, 4);
  Vec e1 = Vec::Zero(5), e5 = Vec::Zero(5);
  e1(0) = e5(4) = 1;
  const auto eq = totally_geodesic_test(make_orbit_point(sp, e1), 1e-6);
  EXPECT_TRUE(eq.totally_geodesic);
  EXPECT_EQ(eq.norms.size(), 5u);
  const auto fixed = make_orbit_point(sp, e5);
  EXPECT_EQ(fixed.orbit_dim, 0);
  EXPECT_TRUE(totally_geodesic_test(fixed, 1e-6).totally_geodesic);
}

namespace {

GeodesicProfile s4_normal_geodesic(const ModelGeometry& s4) {
  const auto p = make_orbit_point(s4, unit_coords(s4, diag({1, 1, -2})));
  return normal_geodesic(p, unit_coords(s4, diag({1, -1, 0})), 3.0, 1e-3);
}

}  // namespace

TEST(Geodesics, ResidualAndGreatCircle) {
  const auto s4 = s4_symmetric();
  const auto g = s4_normal_geodesic(s4);
  EXPECT_LT(g.max_residual, 1e-8);
  EXPECT_LT(g.max_drift, 1e-10);
  const Vec x0 = g.samples.front().x, v0 = g.samples.front().v;
  for (std::size_t i = 0; i < g.samples.size(); i += 250) {
    const double t = g.samples[i].t;
    EXPECT_NEAR((g.samples[i].x - (std::cos(t) * x0 + std::sin(t) * v0)).norm(), 0, 1e-9) << t;
  }
  const auto p = make_orbit_point(s4, x0);
  EXPECT_THROW(normal_geodesic(p, p.orbit_tangent.col(0), 1, 1e-3), GeometryError);
}

TEST(KillingProfile, ConcaveOnRoundSphere) {
  const auto s4 = s4_symmetric();
  const auto g = s4_normal_geodesic(s4);
  const auto& want = oracle()["s4_profile_max_f_dd_above_0.1"];
  for (int i = 0; i < 3; ++i) {
    const auto k = killing_norm_profile(g, i);
    EXPECT_LT(k.max_identity_residual, 1e-4) << k.generator;
    EXPECT_LT(k.max_f_dd_above(0.1), 0) << k.generator;
    EXPECT_NEAR(k.max_f_dd_above(0.1), want[k.generator].get<double>(), 1e-6) << k.generator;
  }
  EXPECT_THROW(killing_norm_profile(g, 3), GeometryError);
}

TEST(KillingProfile, IdentityOnCurvedModels) {
  for (auto m : {cp2_projectors("SU(3)"), s7_su3()}) {
    std::mt19937 rng(8);
    std::normal_distribution<double> nd;
    const Vec x = m.name == "s7-su3" ? unit_coords(m, diag({{0, 1}, {0, 2}, {0, -3}})) : projector(m, {1, {0, 0.5}, 2});
    Vec v(m.ambient_dim);
    for (auto& c : v) c = nd(rng);
    const auto g = integrate_geodesic(m, x, v, 1.0, 1e-3);
    EXPECT_LT(g.max_residual, 1e-8) << m.name;
    for (int i = 0; i < 3; ++i) EXPECT_LT(killing_norm_profile(g, i).max_identity_residual, 1e-4) << m.name;
  }
}

TEST(KillingProfile, FlatTorus) {
  const auto t = flat_torus();
  Vec x(4), v(4);
  x << 1, 0, 1, 0;
  v << 0, 1, 0, 1;
  const auto g = integrate_geodesic(t, x, v, 3.0, 1e-3);
  for (int i = 0; i < 2; ++i) {
    const auto k = killing_norm_profile(g, i);
    EXPECT_LT(k.max_abs_f_dd(), 1e-6);
    EXPECT_LT(k.max_identity_residual, 1e-6);
  }
  const auto csv = profile_csv(killing_norm_profile(g, 0));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,f,f_dd,f2_dd,curvature,d_norm2,identity_residual,reliable");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(g.samples.size()) + 1);
}

TEST(ShapeOperator, SphereOrbitsAreScalarOnBlocks) {
  const auto s4 = s4_symmetric();
  const auto g = s4_normal_geodesic(s4);
  const auto& s = g.samples[500];
  const auto p = make_orbit_point(s4, s.x);
  ASSERT_EQ(p.orbit_dim, 3);
  std::vector<std::vector<Vec>> blocks;
  for (int i = 0; i < 3; ++i) blocks.push_back({Vec::Unit(3, i)});
  const auto r = shape_operator_block_check(p, s.v, blocks);
  EXPECT_TRUE(r.ok);
  std::vector<double> eig;
  for (const auto& b : r.block_eigenvalues) eig.push_back(b[0]);
  std::sort(eig.begin(), eig.end());
  const auto want = oracle()["s4_shape_t0.5_eigenvalues"].get<std::vector<double>>();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(eig[i], want[i], 1e-6);

  // One block for everything is still block-diagonal but not scalar.
  EXPECT_FALSE(shape_operator_block_check(p, s.v, {{Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)}}).ok);
  // Mixed frames are not orthogonal across blocks.
  const Vec mix = (Vec::Unit(3, 0) + Vec::Unit(3, 1));
  EXPECT_THROW(shape_operator_block_check(p, s.v, {{mix}, {Vec::Unit(3, 1)}, {Vec::Unit(3, 2)}}), GeometryError);
  EXPECT_THROW(shape_operator_block_check(p, s.v, {{Vec::Unit(3, 0)}}), GeometryError);
  EXPECT_THROW(shape_operator_block_check(p, s.x, blocks), GeometryError);
}

TEST(Suite, ShippedModelsPass) {
  const auto r = run_geometry_suite(load_models(default_models_path()));
  EXPECT_TRUE(r.pass);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
  EXPECT_EQ(r.report["results"].size(), 8u);
  EXPECT_FALSE(r.csv.empty());
  const auto one = run_geometry_suite(load_models(default_models_path()), {"veronese-rp2-s4"});
  ASSERT_EQ(one.report["results"].size(), 1u);
  EXPECT_EQ(one.report["results"][0]["totally_geodesic"], false);
  EXPECT_THROW(run_geometry_suite(load_models(default_models_path()), {"nope"}), GeometryError);
}

TEST(Suite, TolerancesAndFailures) {
  Tolerances t;
  t.set("identity", 1e-3);
  EXPECT_EQ(t.identity, 1e-3);
  EXPECT_THROW(t.set("bogus", 1), GeometryError);
  EXPECT_THROW(t.set("sff", -1), GeometryError);
  // Expecting the Veronese surface to be totally geodesic must fail.
  auto suite = load_models(default_models_path());
  for (auto& c : suite["checks"])
    if (c["id"] == "veronese-rp2-s4") c["expect_totally_geodesic"] = true;
  const auto r = run_geometry_suite(suite, {"veronese-rp2-s4"});
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.failures.size(), 1u);
}
