#include <map>
#include <set>

#include "cohom/catalog/classical.hpp"
#include "cohom/error.hpp"
#include "cohom/lie/root_system.hpp"
#include "cohom/wallach/wallach.hpp"

namespace cohom::wallach {

using lie::Character;
using lie::Weight;

namespace {

Character adjoint(const ReductiveAlgebra& a) {
  Character::Map m;
  m[Weight(std::vector<int>(a.rank(), 0))] += a.torus_rank;
  Character out(a, m);
  for (std::size_t b = 0; b < a.simples.size(); ++b) {
    std::vector<int> hw(a.rank(), 0);
    const auto& root = lie::RootSystem::of(a.simples[b]).highest_root();
    for (int i = 0; i < a.simples[b].rank; ++i) hw[a.offset(b) + i] = root[i];
    out = lie::direct_sum(out, lie::irreducible_character(a, Weight(hw)));
  }
  return out;
}

Weight dual_highest_weight(const ReductiveAlgebra& a, const Weight& hw) {
  const auto d = lie::decompose(lie::irreducible_character(a, hw).dual());
  return d.front().first;
}

bool is_zero(const Weight& w) {
  for (int x : w.c)
    if (x) return false;
  return true;
}

}  // namespace

ModuleReport decompose_isotropy(const lie::Branching& rule, const Character& ambient_adjoint,
                                const Character& sub_adjoint) {
  const auto& sub = rule.sub;
  std::map<Weight, std::int64_t> parts;
  for (const auto& [w, m] : lie::decompose(rule.restrict(ambient_adjoint))) parts[w] += m;
  for (const auto& [w, m] : lie::decompose(sub_adjoint)) parts[w] -= m;
  ModuleReport r;
  r.k_dim = static_cast<int>(sub_adjoint.dim());
  std::set<Weight> done;
  for (const auto& [w, m] : parts) {
    if (m < 0) throw Error("subgroup adjoint is not contained in the restricted ambient adjoint");
    if (m == 0 || done.count(w)) continue;
    const int dim = static_cast<int>(lie::weyl_dimension(sub, w));
    if (is_zero(w)) {
      r.trivial_dim += static_cast<int>(m) * dim;
      continue;
    }
    RealModule mod;
    mod.constituents = {w};
    switch (lie::irreducible_reality(sub, w)) {
      case lie::Reality::Real:
        mod.real_dim = dim;
        mod.multiplicity = static_cast<int>(m);
        break;
      case lie::Reality::Quaternionic:
        if (m % 2) throw Error("quaternionic summand with odd multiplicity in a real representation");
        mod.real_dim = 2 * dim;
        mod.multiplicity = static_cast<int>(m / 2);
        break;
      case lie::Reality::Complex: {
        const auto d = dual_highest_weight(sub, w);
        auto it = parts.find(d);
        if (it == parts.end() || it->second != m) throw Error("complex summand without its dual");
        mod.constituents.push_back(d);
        mod.real_dim = 2 * dim;
        mod.multiplicity = static_cast<int>(m);
        done.insert(d);
        break;
      }
    }
    done.insert(w);
    r.modules.push_back(std::move(mod));
  }
  r.pairwise_inequivalent = true;
  for (const auto& mod : r.modules) r.pairwise_inequivalent &= mod.multiplicity == 1;
  return r;
}

namespace {

// Weight map of a permutation of the simple blocks of an algebra whose
// blocks all have the same type.
Weight swap_blocks(const ReductiveAlgebra& a, const Weight& w, std::size_t i, std::size_t j) {
  Weight out = w;
  for (int t = 0; t < a.simples[i].rank; ++t) std::swap(out.c[a.offset(i) + t], out.c[a.offset(j) + t]);
  return out;
}

// Torus charges are swapped the same way for a rank-2 torus.
Weight swap_torus(const ReductiveAlgebra& a, const Weight& w) {
  Weight out = w;
  const int t0 = a.offset(a.simples.size());
  std::swap(out.c[t0], out.c[t0 + 1]);
  return out;
}

}  // namespace

ModuleReport module_decomposition_check(int row, int n) {
  using catalog::Classical;
  using catalog::ClassicalGroup;
  const ClassicalGroup sp1{Classical::Sp, 1}, u1{Classical::U, 1};
  if (row == 6) {
    const ClassicalGroup g{Classical::Sp, 3};
    catalog::BlockEmbedding e{"Sp(1)^2 in Sp(3)", g, {sp1, sp1}, {{{0, 0}}, {{1, 0}}, {}}};
    const auto rule = e.branching();
    auto r = decompose_isotropy(rule, adjoint(g.algebra()), adjoint(rule.sub));
    r.row = "row 6";
    if (r.k_dim != 6 || r.trivial_dim != 3 || r.modules.size() != 3 || !r.pairwise_inequivalent)
      throw Error("row 6: unexpected isotropy decomposition");
    for (const auto& m : r.modules)
      if (m.real_dim != 4) throw Error("row 6: module of real dimension " + std::to_string(m.real_dim));
    // The element of H' exchanging the two factors of K swaps the modules
    // carried by one factor each and fixes the mixed one.
    int swapped = 0;
    for (const auto& m : r.modules) {
      const auto img = swap_blocks(rule.sub, m.constituents[0], 0, 1);
      if (img != m.constituents[0]) ++swapped;
    }
    if (swapped != 2) throw Error("row 6: factor swap does not exchange two modules");
    r.swaps = {"factor swap in Sp(2): m_1 <-> m_2", "mixed module (2,2) preserved"};
    r.detail = "sp(3) = k + m_o + m_1 + m_2 + m_3, dim m_o = 3, three inequivalent real 4-dimensional modules";
    return r;
  }
  if (row == 5) {
    if (n < 2) throw Error("row 5 needs n >= 2");
    const ClassicalGroup g{Classical::Sp, n};
    std::vector<ClassicalGroup> f{u1, u1};
    std::vector<std::vector<catalog::SlotTarget>> slots(n);
    slots[0] = {{0, 0}};
    slots[1] = {{1, 0}};
    if (n >= 3) {
      f.push_back({Classical::Sp, n - 2});
      for (int i = 2; i < n; ++i) slots[i] = {{2, i - 2}};
    }
    catalog::BlockEmbedding e{"T^2 x Sp(n-2) in Sp(n)", g, f, slots};
    const auto rule = e.branching();
    auto r = decompose_isotropy(rule, adjoint(g.algebra()), adjoint(rule.sub));
    r.row = "row 5 (n=" + std::to_string(n) + ")";
    std::vector<const RealModule*> planes;
    for (const auto& m : r.modules)
      if (m.real_dim == 2) planes.push_back(&m);
    if (planes.size() != 4 || !r.pairwise_inequivalent) throw Error(r.row + ": expected four inequivalent planes");
    int moved = 0;
    for (const auto* m : planes) moved += swap_torus(rule.sub, m->constituents[0]) != m->constituents[0];
    r.swaps = {"torus coordinate swap moves " + std::to_string(moved) + " of the planes"};
    r.detail = "exactly four inequivalent real 2-dimensional k-modules";
    return r;
  }
  throw Error("module decomposition is recorded for rows 5 and 6 only");
}

}  // namespace cohom::wallach
