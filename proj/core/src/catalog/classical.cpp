#include "cohom/catalog/classical.hpp"

#include "cohom/catalog/group_spec.hpp"
#include "cohom/error.hpp"

namespace cohom::catalog {

using lie::Family;
using lie::ReductiveAlgebra;
using lie::SimpleType;
using lie::Weight;

namespace {

std::vector<Rational> halved(const std::vector<int>& e) {
  std::vector<Rational> out;
  for (int x : e) out.emplace_back(x, 2);
  return out;
}

std::vector<int> doubled_int(const std::vector<Rational>& eps) {
  std::vector<int> out;
  for (const auto& x : eps) {
    Rational d = x * Rational(2);
    if (!d.is_integer()) throw Error("epsilon vector is not in the weight lattice");
    out.push_back(static_cast<int>(d.num));
  }
  return out;
}

int to_int(const Rational& r) {
  if (!r.is_integer()) throw Error("non-integral coordinate " + r.str());
  return static_cast<int>(r.num);
}

SimpleType st(Family f, int r) { return SimpleType::make(f, r); }

}  // namespace

ReductiveAlgebra ClassicalGroup::algebra() const {
  switch (kind) {
    case Classical::SU: return special_unitary_algebra(n);
    case Classical::U: return sum(special_unitary_algebra(n), ReductiveAlgebra::torus(1));
    case Classical::Sp: return symplectic_algebra(n);
    case Classical::SO: return orthogonal_algebra(n);
  }
  throw Error("bad classical kind");
}

int ClassicalGroup::eps_count() const { return kind == Classical::SO ? n / 2 : n; }

std::string ClassicalGroup::name() const {
  const char* k = kind == Classical::SU ? "SU" : kind == Classical::U ? "U" : kind == Classical::Sp ? "Sp" : "SO";
  return std::string(k) + "(" + std::to_string(n) + ")";
}

std::vector<Rational> natural_eps(const ClassicalGroup& g, const Weight& w) {
  if (static_cast<int>(w.size()) != g.algebra().rank()) throw Error("weight length mismatch for " + g.name());
  const int n = g.n;
  switch (g.kind) {
    case Classical::SU:
    case Classical::U: {
      const bool unitary = g.kind == Classical::U;
      if (n == 1) return {unitary ? Rational(w[0]) : Rational(0)};
      Weight a(std::vector<int>(w.c.begin(), w.c.begin() + (n - 1)));
      auto e = lie::to_doubled_eps(st(Family::A, n - 1), a);
      Rational total(0);
      for (int x : e) total = total + Rational(x, 2);
      Rational shift = unitary ? (Rational(w[n - 1]) - total) * Rational(1, n) : -total * Rational(1, n);
      std::vector<Rational> out;
      for (int x : e) out.push_back(Rational(x, 2) + shift);
      return out;
    }
    case Classical::Sp:
      if (n == 1) return {Rational(w[0])};
      if (n == 2) return halved(lie::to_doubled_eps(st(Family::C, 2), Weight{w[1], w[0]}));
      return halved(lie::to_doubled_eps(st(Family::C, n), w));
    case Classical::SO:
      switch (n) {
        case 1: return {};
        case 2: return {Rational(w[0])};
        case 3: return {Rational(w[0], 2)};
        case 4: return {Rational(w[0] + w[1], 2), Rational(w[0] - w[1], 2)};
        case 5: return halved(lie::to_doubled_eps(st(Family::B, 2), w));
        case 6: return halved(lie::to_doubled_eps(st(Family::D, 3), Weight{w[1], w[0], w[2]}));
        default: return halved(lie::to_doubled_eps(st(n % 2 ? Family::B : Family::D, n / 2), w));
      }
  }
  throw Error("bad classical kind");
}

Weight from_natural_eps(const ClassicalGroup& g, const std::vector<Rational>& eps) {
  if (static_cast<int>(eps.size()) != g.eps_count()) throw Error("epsilon length mismatch for " + g.name());
  const int n = g.n;
  switch (g.kind) {
    case Classical::SU:
    case Classical::U: {
      Rational total(0);
      for (const auto& x : eps) total = total + x;
      if (g.kind == Classical::SU && !(total == Rational(0))) throw Error("not a weight of " + g.name());
      if (n == 1) return g.kind == Classical::U ? Weight{to_int(total)} : Weight{};
      std::vector<Rational> rel;
      for (const auto& x : eps) rel.push_back(x - eps.back());
      Weight w = lie::from_doubled_eps(st(Family::A, n - 1), doubled_int(rel));
      if (g.kind == Classical::U) w.c.push_back(to_int(total));
      return w;
    }
    case Classical::Sp: {
      if (n == 1) return Weight{to_int(eps[0])};
      if (n == 2) {
        Weight c = lie::from_doubled_eps(st(Family::C, 2), doubled_int(eps));
        return Weight{c[1], c[0]};
      }
      return lie::from_doubled_eps(st(Family::C, n), doubled_int(eps));
    }
    case Classical::SO:
      switch (n) {
        case 1: return Weight{};
        case 2: return Weight{to_int(eps[0])};
        case 3: return Weight{to_int(eps[0] * Rational(2))};
        case 4: return Weight{to_int(eps[0] + eps[1]), to_int(eps[0] - eps[1])};
        case 5: return lie::from_doubled_eps(st(Family::B, 2), doubled_int(eps));
        case 6: {
          Weight d = lie::from_doubled_eps(st(Family::D, 3), doubled_int(eps));
          return Weight{d[1], d[0], d[2]};
        }
        default: return lie::from_doubled_eps(st(n % 2 ? Family::B : Family::D, n / 2), doubled_int(eps));
      }
  }
  throw Error("bad classical kind");
}

Weight defining_weight(const ClassicalGroup& g) {
  std::vector<Rational> e(g.eps_count(), Rational(0));
  if (!e.empty()) e[0] = Rational(1);
  if (g.kind == Classical::SU && g.n > 1) {
    for (auto& x : e) x = x - Rational(1, g.n);
  }
  if (g.kind == Classical::SU && g.n == 1) return Weight{};
  return from_natural_eps(g, e);
}

ReductiveAlgebra BlockEmbedding::sub_algebra() const {
  ReductiveAlgebra out;
  for (const auto& f : factors) out = sum(out, f.algebra());
  return out;
}

lie::Branching BlockEmbedding::branching() const {
  if (static_cast<int>(slots.size()) != ambient.eps_count()) throw Error(name + ": one slot list per ambient coordinate");
  for (const auto& targets : slots)
    for (const auto& t : targets)
      if (t.factor < 0 || t.factor >= static_cast<int>(factors.size()) || t.coord < 0 ||
          t.coord >= factors[t.factor].eps_count())
        throw Error(name + ": slot target out of range");
  const ReductiveAlgebra sub = sub_algebra();
  auto self = *this;
  return lie::Branching(name, ambient.algebra(), sub, [self, sub](const Weight& w) {
    auto amb = natural_eps(self.ambient, w);
    std::vector<std::vector<Rational>> local;
    for (const auto& f : self.factors) local.emplace_back(f.eps_count(), Rational(0));
    for (std::size_t j = 0; j < amb.size(); ++j)
      for (const auto& t : self.slots[j]) local[t.factor][t.coord] = local[t.factor][t.coord] + amb[j] * Rational(t.coeff);
    // Reassemble: simple blocks of all factors first, then their torus charges.
    std::vector<int> simple_part, torus_part;
    for (std::size_t f = 0; f < self.factors.size(); ++f) {
      // SU tori are trace free: drop the trace part before converting.
      if (self.factors[f].kind == Classical::SU) {
        Rational mean(0);
        for (const auto& x : local[f]) mean = mean + x;
        mean = mean * Rational(1, self.factors[f].n);
        for (auto& x : local[f]) x = x - mean;
      }
      Weight fw = from_natural_eps(self.factors[f], local[f]);
      const auto alg = self.factors[f].algebra();
      const int ss = alg.rank() - alg.torus_rank;
      simple_part.insert(simple_part.end(), fw.c.begin(), fw.c.begin() + ss);
      torus_part.insert(torus_part.end(), fw.c.begin() + ss, fw.c.end());
    }
    simple_part.insert(simple_part.end(), torus_part.begin(), torus_part.end());
    return Weight(simple_part);
  });
}

}  // namespace cohom::catalog
