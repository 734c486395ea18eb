#include "cohom/cross/obstruction.hpp"

#include <algorithm>
#include <numeric>

namespace cohom::cross {

using lie::Family;
using lie::Weight;

int SubgroupData::fixed_dim(const catalog::NamedRep& ambient_rep) const {
  return static_cast<int>(lie::trivial_multiplicity(rule.restrict(ambient_rep.complexified())));
}

SubgroupData SubgroupData::derived() const {
  std::vector<std::size_t> blocks(rule.sub.simples.size());
  std::iota(blocks.begin(), blocks.end(), 0);
  return {name + " (semisimple part)", lie::compose(rule, lie::ideal_inclusion(rule.sub, blocks, {}))};
}

namespace {

void dualise_block(const lie::SimpleType& s, std::vector<int>& c, int off) {
  auto b = c.begin() + off;
  switch (s.family) {
    case Family::A: std::reverse(b, b + s.rank); break;
    case Family::D:
      if (s.rank % 2) std::swap(c[off + s.rank - 2], c[off + s.rank - 1]);
      break;
    case Family::E:
      if (s.rank == 6) {
        std::swap(c[off + 0], c[off + 5]);
        std::swap(c[off + 2], c[off + 4]);
      }
      break;
    default: break;
  }
}

}  // namespace

std::vector<std::pair<Weight, std::int64_t>> normalised_signature(const lie::Character& c) {
  const auto& alg = c.algebra();
  const auto parts = lie::decompose(c);
  const int t0 = alg.offset(alg.simples.size());
  int g = 0;
  for (const auto& [w, m] : parts)
    for (int i = t0; i < alg.rank(); ++i) g = std::gcd(g, std::abs(w[i]));
  if (g == 0) g = 1;
  const std::size_t nb = alg.simples.size();
  std::vector<std::pair<Weight, std::int64_t>> best;
  for (int sign : {1, -1})
    for (std::size_t mask = 0; mask < (std::size_t{1} << nb); ++mask) {
      std::vector<std::pair<Weight, std::int64_t>> v;
      for (const auto& [w, m] : parts) {
        std::vector<int> x = w.c;
        for (std::size_t b = 0; b < nb; ++b)
          if (mask >> b & 1) dualise_block(alg.simples[b], x, alg.offset(b));
        for (int i = t0; i < alg.rank(); ++i) x[i] = sign * x[i] / g;
        v.emplace_back(Weight(x), m);
      }
      std::sort(v.begin(), v.end());
      if (best.empty() || v < best) best = v;
    }
  return best;
}

Obstruction containment_obstruction(const ContainmentQuestion& q) {
  const auto& hv = q.h_v;
  const int dh = hv.algebra().dimension(), dk = q.k.algebra().dimension();
  if (dh > dk)
    return {true, "dimension", "dim " + hv.name + " = " + std::to_string(dh) + " > dim " + q.k.name + " = " +
                                   std::to_string(dk)};
  if (hv.algebra().rank() > q.k.algebra().rank())
    return {true, "rank", "rank " + hv.name + " = " + std::to_string(hv.algebra().rank()) + " > rank " + q.k.name +
                              " = " + std::to_string(q.k.algebra().rank())};
  // A connected semisimple subgroup of K lies in its semisimple part.
  const SubgroupData k_eff = hv.semisimple() && !q.k.semisimple() ? q.k.derived() : q.k;
  const int dke = k_eff.algebra().dimension();
  for (const auto& rep : q.ambient_reps) {
    const int fh = hv.fixed_dim(rep), fk = k_eff.fixed_dim(rep);
    if (fh < fk)
      return {true, "fixed-space", "Fix(" + rep.name + ", " + hv.name + ") = " + std::to_string(fh) + " < Fix(" +
                                       rep.name + ", " + k_eff.name + ") = " + std::to_string(fk)};
    if (dh == dke && fh != fk)
      return {true, "equal-dimension-fixed-space",
              "equal dimensions but Fix(" + rep.name + ") differ: " + std::to_string(fh) + " vs " + std::to_string(fk)};
  }
  if (dh == dke && hv.algebra().canonical() != k_eff.algebra().canonical())
    return {true, "equal-dimension-algebra",
            "equal dimensions but " + hv.algebra().name() + " is not " + k_eff.algebra().name()};
  if (dh == dke && hv.algebra().torus_rank <= 1 && k_eff.algebra().torus_rank <= 1 &&
      hv.algebra().canonical() == k_eff.algebra().canonical()) {
    for (const auto& rep : q.ambient_reps) {
      const auto a = normalised_signature(hv.rule.restrict(rep.complexified()));
      const auto b = normalised_signature(k_eff.rule.restrict(rep.complexified()));
      if (a != b) return {true, "restricted-signature", "restrictions of " + rep.name + " are not equivalent"};
    }
  }
  return {false, "", "no obstruction found"};
}

}  // namespace cohom::cross
