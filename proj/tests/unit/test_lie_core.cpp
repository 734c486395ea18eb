#include <gtest/gtest.h>

#include <random>

#include "cohom/error.hpp"
#include "cohom/lie/character.hpp"
#include "cohom/lie/restriction.hpp"
#include "cohom/lie/root_system.hpp"
#include "oracle/weyl_straighten.hpp"

using namespace cohom::lie;

namespace {

ReductiveAlgebra alg(const std::string& s) { return ReductiveAlgebra::simple(SimpleType::parse(s)); }

std::map<std::vector<int>, std::int64_t> plain(const Character& c) {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [w, m] : c.weights()) out[w.c] = m;
  return out;
}

std::vector<oracle::Block> blocks_of(const ReductiveAlgebra& a) {
  std::vector<oracle::Block> b;
  for (const auto& s : a.simples) b.push_back({"ABCDEFG"[static_cast<int>(s.family)], s.rank});
  return b;
}

}  // namespace

TEST(SimpleType, ParsesAndValidates) {
  EXPECT_EQ(SimpleType::parse("E7").dimension(), 133);
  EXPECT_EQ(SimpleType::parse("B4").dimension(), 36);
  EXPECT_EQ(SimpleType::parse("G2").dimension(), 14);
  EXPECT_EQ(SimpleType::parse("F4").dimension(), 52);
  EXPECT_THROW(SimpleType::parse("B1"), cohom::Error);
  EXPECT_THROW(SimpleType::parse("E9"), cohom::Error);
  EXPECT_THROW(SimpleType::parse("X2"), cohom::Error);
}

TEST(SimpleType, CanonicalFormIdentifiesLowRankCoincidences) {
  ReductiveAlgebra a{{SimpleType::parse("C2"), SimpleType::parse("A1")}, 1};
  EXPECT_EQ(a.canonical().name(), "A1+B2+T1");
  EXPECT_EQ(alg("D3").canonical().name(), "A3");
}

TEST(RootSystem, PositiveRootCounts) {
  const std::pair<const char*, int> expected[] = {{"A4", 10}, {"B3", 9},  {"C3", 9},  {"D4", 12},
                                                  {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24},
                                                  {"G2", 6}};
  for (auto [name, n] : expected)
    EXPECT_EQ(static_cast<int>(RootSystem::of(SimpleType::parse(name)).positive_roots().size()), n) << name;
}

TEST(RootSystem, HighestRootIsAdjointWeight) {
  EXPECT_EQ(RootSystem::of(SimpleType::parse("A3")).highest_root(), (Weight{1, 0, 1}));
  EXPECT_EQ(RootSystem::of(SimpleType::parse("G2")).highest_root(), (Weight{0, 1}));
  EXPECT_EQ(RootSystem::of(SimpleType::parse("F4")).highest_root(), (Weight{1, 0, 0, 0}));
  EXPECT_EQ(RootSystem::of(SimpleType::parse("C3")).highest_root(), (Weight{2, 0, 0}));
}

TEST(Character, SmallIrreducibles) {
  auto a1 = irreducible_character(alg("A1"), {2});
  EXPECT_EQ(a1.dim(), 3);
  EXPECT_EQ(a1.multiplicity({-2}), 1);
  EXPECT_EQ(a1.multiplicity({0}), 1);
  EXPECT_EQ(a1.multiplicity({2}), 1);
  EXPECT_EQ(irreducible_character(alg("A2"), {1, 0}).dim(), 3);
  EXPECT_EQ(irreducible_character(alg("F4"), {0, 0, 0, 1}).dim(), 26);
  EXPECT_EQ(irreducible_character(alg("F4"), {0, 0, 0, 1}).multiplicity({0, 0, 0, 0}), 2);
  EXPECT_EQ(irreducible_character(alg("G2"), {1, 0}).dim(), 7);
  EXPECT_EQ(irreducible_character(alg("E6"), {1, 0, 0, 0, 0, 0}).dim(), 27);
  EXPECT_EQ(irreducible_character(alg("E7"), {0, 0, 0, 0, 0, 0, 1}).dim(), 56);
  EXPECT_EQ(irreducible_character(alg("B4"), {0, 0, 0, 1}).dim(), 16);
  EXPECT_THROW(irreducible_character(alg("A2"), {-1, 0}), cohom::Error);
}

TEST(Character, FreudenthalAgreesWithWeylDimension) {
  std::mt19937 rng(7);
  const char* types[] = {"A1", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A2", "D5"};
  for (const char* t : types) {
    auto a = alg(t);
    for (int trial = 0; trial < 4; ++trial) {
      Weight hw(std::vector<int>(a.rank(), 0));
      for (int i = 0; i < a.rank(); ++i) hw[i] = static_cast<int>(rng() % (a.rank() > 3 ? 2 : 3));
      auto ch = irreducible_character(a, hw);
      EXPECT_EQ(ch.dim(), weyl_dimension(a, hw)) << t << " " << hw.str();
      EXPECT_TRUE(ch.weyl_invariant()) << t << " " << hw.str();
    }
  }
}

TEST(Character, RealityTypes) {
  EXPECT_EQ(irreducible_reality(alg("A1"), {1}), Reality::Quaternionic);
  EXPECT_EQ(irreducible_reality(alg("A1"), {2}), Reality::Real);
  EXPECT_EQ(irreducible_reality(alg("A2"), {1, 0}), Reality::Complex);
  EXPECT_EQ(irreducible_reality(alg("C3"), {1, 0, 0}), Reality::Quaternionic);
  EXPECT_EQ(irreducible_reality(alg("B4"), {0, 0, 0, 1}), Reality::Real);
  EXPECT_EQ(irreducible_reality(alg("D5"), {0, 0, 0, 0, 1}), Reality::Complex);
  EXPECT_EQ(irreducible_reality(alg("E7"), {0, 0, 0, 0, 0, 0, 1}), Reality::Quaternionic);
}

TEST(Character, TensorAndSymmetricSquares) {
  auto v = irreducible_character(alg("A1"), {1});
  auto vv = tensor(v, v);
  auto d = decompose(vv);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(sym2(v), irreducible_character(alg("A1"), {2}));
  EXPECT_EQ(lambda2(v), Character::trivial(alg("A1")));
  auto std3 = irreducible_character(alg("A2"), {1, 0});
  EXPECT_EQ(sym2(std3).dim(), 6);
  EXPECT_EQ(lambda2(std3), irreducible_character(alg("A2"), {0, 1}));
}

TEST(Character, IsotropyOfTheRoundTwoSphereHasNoInvariantQuadratic) {
  // SO(2) acting on T S^2 with weights +-1: S^2 tau* tensored with tau has
  // no invariant part.
  auto t = ReductiveAlgebra::torus(1);
  Character tau(t, {{Weight{1}, 1}, {Weight{-1}, 1}});
  EXPECT_EQ(trivial_multiplicity(tensor(sym2_dual(tau), tau)), 0);
  // SO(3) on R^3.
  auto v = irreducible_character(alg("A1"), {2});
  EXPECT_EQ(trivial_multiplicity(tensor(sym2_dual(v), v)), 0);
}

TEST(Character, DecomposeRejectsNonInvariant) {
  Character bad(alg("A1"), {{Weight{2}, 1}});
  EXPECT_THROW(decompose(bad), cohom::Error);
}

TEST(Character, DecompositionMatchesStraighteningOracle) {
  std::mt19937 rng(11);
  const char* types[] = {"A2", "B2", "G2", "C3", "A3", "D4"};
  for (const char* t : types) {
    auto a = alg(t);
    for (int trial = 0; trial < 3; ++trial) {
      Weight h1(std::vector<int>(a.rank(), 0)), h2 = h1;
      h1[rng() % a.rank()] = 1;
      h2[rng() % a.rank()] += 1;
      auto c = tensor(irreducible_character(a, h1), irreducible_character(a, h2));
      auto ours = decompose(c);
      auto ref = oracle::decompose(blocks_of(a), 0, plain(c));
      std::map<std::vector<int>, std::int64_t> got;
      for (const auto& [w, m] : ours) got[w.c] = m;
      EXPECT_EQ(got, ref) << t;
      EXPECT_EQ(trivial_multiplicity(tensor(c, c.dual())), oracle::trivial_count(blocks_of(a), 0, plain(tensor(c, c.dual()))));
    }
  }
}

TEST(Character, ProductAlgebraAndTorusCharges) {
  ReductiveAlgebra a{{SimpleType::parse("A1"), SimpleType::parse("A2")}, 1};
  auto c = irreducible_character(a, {1, 1, 0, 3});
  EXPECT_EQ(c.dim(), 6);
  auto cc = tensor(c, c.dual());
  EXPECT_EQ(trivial_multiplicity(cc), 1);
  EXPECT_EQ(trivial_multiplicity(cc), oracle::trivial_count(blocks_of(a), 1, plain(cc)));
}

TEST(Restriction, EpsilonRoundTrip) {
  const char* types[] = {"A3", "B3", "C3", "D4", "D5"};
  for (const char* t : types) {
    auto s = SimpleType::parse(t);
    for (int i = 0; i < s.rank; ++i) {
      Weight w(std::vector<int>(s.rank, 0));
      w[i] = 1;
      EXPECT_EQ(from_doubled_eps(s, to_doubled_eps(s, w)), w) << t;
    }
  }
}

TEST(Restriction, VectorOfSO5ToSO4) {
  // so(5) > so(4) = A1+A1 via eps1 +- eps2.
  auto b2 = alg("B2");
  ReductiveAlgebra sub{{SimpleType::parse("A1"), SimpleType::parse("A1")}, 0};
  RestrictionBuilder rb("so5>so4", b2, sub, {false, false});
  rb.set(rb.out(0, 0), rb.in(0, 0), 1).set(rb.out(0, 0), rb.in(0, 1), 1);
  rb.set(rb.out(1, 0), rb.in(0, 0), 1).set(rb.out(1, 0), rb.in(0, 1), -1);
  auto r = rb.build();
  auto vec = r.restrict(irreducible_character(b2, {1, 0}));
  EXPECT_EQ(vec.dim(), 5);
  EXPECT_EQ(trivial_multiplicity(vec), 1);
  auto d = decompose(vec);
  ASSERT_EQ(d.size(), 2u);
}
