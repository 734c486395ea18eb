#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cohom/wallach/wallach.hpp"

using namespace cohom;
using namespace cohom::wallach;

namespace {

triple::AdmissibleTriple load(const std::string& file) {
  std::ifstream in(std::string(COHOM_TEST_DIR) + "/fixtures/triples/" + file);
  return triple::triple_from_json(nlohmann::json::parse(in));
}

std::string slurp(const std::string& file) {
  std::ifstream in(std::string(COHOM_TEST_DIR) + "/golden/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json slice(std::vector<int> hw, const char* reality) {
  return {{"rep_name", "s"}, {"highest_weights", {hw}}, {"reality", reality}};
}

triple::AdmissibleTriple make(const std::string& g, const std::string& h, const std::string& k, const std::string& hp,
                              nlohmann::json sh, nlohmann::json shp) {
  nlohmann::json j{{"name", "t"}, {"group", g},       {"h", h},           {"k", k},
                   {"h_prime", hp}, {"slice_h", sh}, {"slice_h_prime", shp}};
  return triple::triple_from_json(j);
}

PositiveCurvatureVerdict run(const triple::AdmissibleTriple& t, bool curved = true) {
  return classify_positive_curvature({triple::CohomOneManifold::from_triple(t), curved});
}

std::set<std::string> labels(const std::vector<WallachRow>& rows, bool active) {
  std::set<std::string> s;
  for (const auto& r : rows)
    if (r.active == active) s.insert(r.label());
  return s;
}

}  // namespace

TEST(WallachRows, DimensionIsQuotientDimension) {
  for (const auto& r : wallach_rows(8)) EXPECT_EQ(r.dim, r.g1.dimension() - r.h1.dimension()) << r.label();
  // Hand values: CP^n, S^2n, HP^{n-1}, the flag manifolds and the Cayley plane.
  std::map<std::string, int> expect{{"row 1 (n=4)", 8},  {"row 2", 6},  {"row 3 (n=5)", 10}, {"row 4 (n=3)", 8},
                                    {"row 5 (n=3)", 10}, {"row 6", 12}, {"row 7", 16},       {"row 8", 24},
                                    {"row 9", 6}};
  for (const auto& r : wallach_rows(6))
    if (expect.count(r.label())) EXPECT_EQ(r.dim, expect[r.label()]) << r.label();
  for (const auto& r : wallach_rows(6)) EXPECT_EQ(r.dim % 2, 0) << r.label();
}

TEST(WallachRows, RowOneStartsAtTwo) {
  for (const auto& r : wallach_rows(6))
    if (r.index == 1) EXPECT_GE(r.n, 2);
}

TEST(WallachRows, IdealTest) {
  EXPECT_TRUE(has_su_or_sp_ideal(catalog::parse_group("U(3)").algebra));
  EXPECT_TRUE(has_su_or_sp_ideal(catalog::parse_group("Spin(5)").algebra));
  EXPECT_TRUE(has_su_or_sp_ideal(catalog::parse_group("Spin(6)").algebra));
  EXPECT_TRUE(has_su_or_sp_ideal(catalog::parse_group("Spin(4)").algebra));
  EXPECT_FALSE(has_su_or_sp_ideal(catalog::parse_group("Spin(8)").algebra));
  EXPECT_FALSE(has_su_or_sp_ideal(catalog::parse_group("Spin(9)").algebra));
  EXPECT_FALSE(has_su_or_sp_ideal(catalog::parse_group("T^2").algebra));
}

TEST(WallachRows, FilterSets) {
  const auto rows = wallach_filter(4);
  const std::set<std::string> active{"row 1 (n=2)", "row 1 (n=3)", "row 1 (n=4)", "row 3 (n=3)", "row 4 (n=3)",
                                     "row 4 (n=4)", "row 5 (n=2)", "row 5 (n=3)", "row 5 (n=4)", "row 6"};
  EXPECT_EQ(labels(rows, true), active);
  for (const auto& r : rows) {
    if (r.active) continue;
    const bool by_ideal = !has_su_or_sp_ideal(r.h1.algebra);
    EXPECT_EQ(r.rule == "ideal-test", by_ideal) << r.label();
    EXPECT_EQ(r.asserted, !by_ideal) << r.label();
    EXPECT_FALSE(r.reason.empty());
  }
  for (const auto* l : {"row 2", "row 7", "row 8", "row 3 (n=1)", "row 3 (n=4)"})
    EXPECT_TRUE(labels(rows, false).count(l)) << l;
}

TEST(WallachRows, TableMatchesGolden) {
  EXPECT_EQ(wallach_table_markdown(wallach_filter(4)), slurp("wallach_table.md"));
}

TEST(SuRow, SevenRowsAndOneSurvivor) {
  for (int m = 4; m <= 7; ++m) {
    const auto c = su_row_candidates(m);
    EXPECT_EQ(c.size(), 7u) << m;
    int alive = 0;
    for (const auto& r : c) {
      if (r.excluded) continue;
      ++alive;
      EXPECT_EQ(r.h_prime_algebra.canonical(),
                catalog::sum(catalog::special_unitary_algebra(2), catalog::special_unitary_algebra(m - 2)).canonical());
      EXPECT_EQ(r.dim_v_prime, 3);
    }
    EXPECT_EQ(alive, 1) << m;
    for (const auto& r : c) {
      EXPECT_EQ(r.maximal_rank, r.h_prime_algebra.rank() == m - 1) << m << " row " << r.row;
      if (r.excluded) EXPECT_FALSE(r.reason.empty());
    }
  }
}

TEST(SuRow, CollapsesAtThree) {
  const auto c = su_row_candidates(3);
  EXPECT_EQ(c.size(), 5u);
  int su2 = 0;
  for (const auto& r : c)
    if (!r.excluded) {
      EXPECT_EQ(r.h_prime_algebra.canonical(), catalog::special_unitary_algebra(2));
      ++su2;
    }
  EXPECT_EQ(su2, 1);
  EXPECT_THROW(su_row_candidates(2), Error);
}

TEST(SuRow, Twists) {
  EXPECT_EQ(compatible_twists(3), (std::vector<int>{-1, 0}));
  for (int m = 4; m <= 7; ++m) {
    EXPECT_EQ(compatible_twists(m), (std::vector<int>{-1})) << m;
    EXPECT_EQ(forced_twist(m), -1);
  }
  EXPECT_EQ(forced_twist(3), -1);
}

TEST(SuRow, ForcedTripleDimensions) {
  for (int m = 3; m <= 7; ++m) {
    const auto f = forced_triple(m);
    const auto h = catalog::parse_group(f.h), k = catalog::parse_group(f.k), hp = catalog::parse_group(f.h_prime);
    EXPECT_EQ(h.dimension() - k.dimension(), 2 * m - 3) << m;  // H/K a sphere S^{2m-3}
    EXPECT_EQ(hp.dimension() - k.dimension(), 2) << m;         // H'/K = S^2
    const auto su = catalog::parse_group("SU(" + std::to_string(m) + ")");
    // Cohomogeneity one: both sides give dim M = 4(m-1).
    EXPECT_EQ(su.dimension() - h.dimension() + 2 * (m - 1), 4 * (m - 1));
    EXPECT_EQ(su.dimension() - hp.dimension() + 3, 4 * (m - 1));
  }
}

TEST(SuRow, CandidateTablesMatchGolden) {
  EXPECT_EQ(candidate_table_markdown(su_row_candidates(4)), slurp("candidates_su4.md"));
  EXPECT_EQ(candidate_table_markdown(su_row_candidates(3)), slurp("candidates_su3.md"));
}

TEST(Modules, ThreeFactorRow) {
  const auto r = module_decomposition_check(6);
  EXPECT_EQ(r.k_dim, 6);
  EXPECT_EQ(r.trivial_dim, 3);
  ASSERT_EQ(r.modules.size(), 3u);
  for (const auto& m : r.modules) {
    EXPECT_EQ(m.real_dim, 4);
    EXPECT_EQ(m.multiplicity, 1);
  }
  EXPECT_TRUE(r.pairwise_inequivalent);
  // 21 = 6 + 3 + 3 * 4
  EXPECT_EQ(r.k_dim + r.trivial_dim + 12, catalog::parse_group("Sp(3)").dimension());
}

TEST(Modules, CircleRowHasFourPlanes) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = module_decomposition_check(5, n);
    EXPECT_EQ(std::count_if(r.modules.begin(), r.modules.end(), [](const RealModule& m) { return m.real_dim == 2; }),
              4)
        << n;
    EXPECT_TRUE(r.pairwise_inequivalent);
    int total = r.k_dim + r.trivial_dim;
    for (const auto& m : r.modules) total += m.real_dim * m.multiplicity;
    EXPECT_EQ(total, catalog::symplectic_algebra(n).dimension()) << n;
  }
  EXPECT_THROW(module_decomposition_check(5, 1), Error);
  EXPECT_THROW(module_decomposition_check(4), Error);
}

TEST(Modules, WholeGroupLeavesNothing) {
  const auto a = catalog::special_unitary_algebra(3);
  const auto adj = lie::irreducible_character(a, lie::Weight{1, 1});
  const auto r = decompose_isotropy(lie::ideal_inclusion(a, {0}, {}), adj, adj);
  EXPECT_TRUE(r.modules.empty());
  EXPECT_EQ(r.trivial_dim, 0);
  EXPECT_EQ(r.k_dim, 8);
}

TEST(Center, CircleCentrePasses) {
  homogeneous::HomogeneousSpace b;
  b.group = catalog::parse_group("T^1xSU(3)");
  b.stabilizer = catalog::parse_group("T^1xS(U(1)xU(2))");
  const auto r = center_dimension_check(b.group, b);
  EXPECT_TRUE(r.precondition_ok);
  EXPECT_TRUE(r.center_in_h);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.center_dim, 1);
}

TEST(Center, TwoTorusFailsAndSemisimpleIsRejected) {
  homogeneous::HomogeneousSpace b;
  b.group = catalog::parse_group("T^2xSU(3)");
  b.stabilizer = catalog::parse_group("T^2xS(U(1)xU(2))");
  const auto r = center_dimension_check(b.group, b);
  EXPECT_TRUE(r.precondition_ok);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.center_dim, 2);
  b.group = catalog::parse_group("SU(3)");
  b.stabilizer = catalog::parse_group("S(U(1)xU(2))");
  EXPECT_FALSE(center_dimension_check(b.group, b).precondition_ok);
  b.group = catalog::parse_group("T^1xSpin(7)");
  b.stabilizer = catalog::parse_group("T^1xG2");
  EXPECT_FALSE(center_dimension_check(b.group, b).precondition_ok);
}

TEST(GoBranch, SuAndSpGiveCodimensionFour) {
  for (const auto* g : {"SU(2)", "SU(3)", "SU(5)", "Sp(2)", "Sp(3)", "Sp(4)"}) {
    const auto r = g_o_nonzero_branch(catalog::parse_group(g).algebra);
    EXPECT_TRUE(r.ok) << g;
    EXPECT_EQ(r.fixed_codim, 4) << g;
  }
  EXPECT_EQ(g_o_nonzero_branch(catalog::parse_group("SU(2)").algebra).su2_location, "g_o");
  EXPECT_EQ(g_o_nonzero_branch(catalog::parse_group("SU(4)").algebra).su2_location, "k_o");
  for (const auto* g : {"Spin(7)", "G2", "SU(2)xSU(3)", "T^1xSU(2)"})
    EXPECT_FALSE(g_o_nonzero_branch(catalog::parse_group(g).algebra).ok) << g;
}

TEST(Classify, SuSurvivorIsQuaternionicProjective) {
  const auto v = run(load("t1_su4_survivor.json"));
  EXPECT_EQ(v.diffeo_type, DiffeoType::QuatProj);
  EXPECT_EQ(v.model, "HP^3");
  EXPECT_EQ(v.branch, "g_o_zero");
  EXPECT_EQ(v.center_dim, 1);
  EXPECT_EQ(v.rule_used, "su-row-survivor");
}

TEST(Classify, ThreeFactorRowIsExcluded) {
  const auto v = run(load("t1_sp3_three_factors.json"));
  EXPECT_EQ(v.diffeo_type, DiffeoType::Excluded);
  EXPECT_EQ(v.rule_used, "concavity");
}

TEST(Classify, EarlyGates) {
  EXPECT_EQ(run(load("su4_survivor.json")).rule_used, "non-semisimple");
  const auto v = run(load("t1_su4_survivor.json"), false);
  EXPECT_EQ(v.diffeo_type, DiffeoType::Inconclusive);
  EXPECT_EQ(v.rule_used, "positive-curvature");
  EXPECT_EQ(v.trace.back().gate, "positive-curvature");
  // T^1 x SU(2) on S^5: odd dimension.
  EXPECT_EQ(run(load("circle_su2_s5.json")).rule_used, "even-dimension");
}

TEST(Classify, FixedPointAndCodimensionTwo) {
  // T^1 x SU(3) on CP^3: a fixed point and a CP^2 of codimension 2.
  const auto fixed = make("T^1xSU(3)", "T^1xSU(3)", "T^1xSU(2)", "T^2xSU(2)", slice({1, 0, 1}, "complex"),
                          slice({0, 1, 0}, "complex"));
  auto v = run(fixed);
  EXPECT_EQ(v.diffeo_type, DiffeoType::CrossByFixedPoint);
  EXPECT_EQ(v.branch, "fixed-point");
  const auto swapped = make("T^1xSU(3)", "T^2xSU(2)", "T^1xSU(2)", "T^1xSU(3)", slice({0, 1, 0}, "complex"),
                            slice({1, 0, 1}, "complex"));
  v = run(swapped);
  EXPECT_EQ(v.diffeo_type, DiffeoType::SphereOrComplexProj);
  EXPECT_EQ(v.branch, "codim-2");
}

TEST(Classify, TwoTorusIsExcluded) {
  const auto t = make("T^2xSU(2)", "T^2xSU(2)", "T^2", "T^2xSU(2)", slice({1, 1, 0}, "complex"),
                      slice({1, 1, 0}, "complex"));
  const auto v = run(t);
  EXPECT_EQ(v.diffeo_type, DiffeoType::Excluded);
  EXPECT_EQ(v.rule_used, "center-dimension");
  EXPECT_EQ(v.center_dim, 2);
}

TEST(Classify, NonzeroKernelIdeal) {
  const auto t = make("T^1xSU(2)xSU(3)", "T^2xSU(2)xSU(2)", "T^2xSU(2)", "T^2xSU(2)xSU(2)",
                      slice({1, 0, 1, 0}, "complex"), slice({1, 0, 1, 0}, "complex"));
  const auto v = run(t);
  EXPECT_EQ(v.branch, "g_o_nonzero");
  EXPECT_EQ(v.diffeo_type, DiffeoType::SphereComplexOrQuatProj);
  EXPECT_EQ(v.rule_used, "su2-fixed-codim-4");
}

TEST(Classify, RowRules) {
  const auto sphere6 = make("T^1xSpin(7)", "T^1xSpin(6)", "T^1xSU(3)", "T^1xSpin(6)", slice({1, 0, 0, 1}, "complex"),
                            slice({1, 0, 0, 1}, "complex"));
  auto v = run(sphere6);
  EXPECT_EQ(v.diffeo_type, DiffeoType::Excluded);
  EXPECT_EQ(v.rule_used, "two-orbit-frankel");
  EXPECT_NE(v.trace.back().outcome.find("Fix(R^7, su(3)) = 1"), std::string::npos);
  EXPECT_NE(v.trace.back().outcome.find("1 distinct phase"), std::string::npos);

  const auto circle_row = make("T^1xSp(3)", "T^2xSp(2)", "T^2xSp(1)", "T^2xSp(2)", slice({0, 1, 1, 0}, "complex"),
                               slice({0, 1, 1, 0}, "complex"));
  v = run(circle_row);
  EXPECT_EQ(v.diffeo_type, DiffeoType::Excluded);
  EXPECT_EQ(v.rule_used, "module-parity");

  const auto two_factor = make("T^1xSp(3)", "T^1xSp(1)xSp(2)", "T^1xSp(2)", "T^1xSp(1)xSp(2)",
                               slice({1, 0, 0, 1}, "complex"), slice({1, 0, 0, 1}, "complex"));
  v = run(two_factor);
  EXPECT_EQ(v.diffeo_type, DiffeoType::Inconclusive);
  EXPECT_EQ(v.rule_used, "no-rule");
}

TEST(Classify, RandomInputsAlwaysGiveARule) {
  const std::vector<std::string> groups{"T^1xSU(3)", "T^1xSU(4)", "T^2xSU(2)", "T^1xSp(2)", "T^1xSp(3)",
                                        "SU(3)",     "T^1xSU(2)", "T^3",       "T^1xSpin(7)"};
  const std::vector<std::string> subs{"T^1", "T^2", "T^1xSU(2)", "T^2xSU(2)", "SU(2)", "T^1xSp(1)xSp(1)", "T^3"};
  std::mt19937 rng(11);
  auto pick = [&](const std::vector<std::string>& v) { return v[rng() % v.size()]; };
  int decided = 0, built = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto g = pick(groups), h = pick(subs), k = pick(subs), hp = pick(subs);
    const auto ha = catalog::parse_group(h).algebra, hpa = catalog::parse_group(hp).algebra;
    auto hw = [&](const lie::ReductiveAlgebra& a) {
      std::vector<int> w(static_cast<std::size_t>(a.rank()));
      for (auto& x : w) x = static_cast<int>(rng() % 2);
      return w;
    };
    triple::CohomOneManifold m;
    try {
      m = triple::CohomOneManifold::from_triple(
          make(g, h, k, hp, slice(hw(ha), "complex"), slice(hw(hpa), "complex")));
    } catch (const Error&) {
      continue;
    }
    ++built;
    PositiveCurvatureVerdict v;
    ASSERT_NO_THROW(v = classify_positive_curvature({m, true})) << g << " " << h << " " << hp;
    EXPECT_FALSE(v.rule_used.empty());
    EXPECT_FALSE(v.trace.empty());
    decided += v.diffeo_type != DiffeoType::Inconclusive;
  }
  EXPECT_GT(built, 0);
}

TEST(Classify, JsonShape) {
  nlohmann::json j = run(load("t1_su4_survivor.json"));
  EXPECT_EQ(j["diffeo_type"], "quaternionic_projective");
  EXPECT_EQ(j["model"], "HP^3");
  EXPECT_TRUE(j["trace"].is_array());
  nlohmann::json rows = wallach_filter(3);
  EXPECT_EQ(rows[0]["row"], 1);
  nlohmann::json c = su_row_candidates(4);
  EXPECT_EQ(c.size(), 7u);
  nlohmann::json mod = module_decomposition_check(6);
  EXPECT_EQ(mod["modules"].size(), 3u);
}
