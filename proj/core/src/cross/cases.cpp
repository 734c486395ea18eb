#include <utility>

#include "cohom/catalog/classical.hpp"
#include "cohom/catalog/group_spec.hpp"
#include "cohom/cross/cross.hpp"

namespace cohom::cross {

using catalog::BlockEmbedding;
using catalog::Classical;
using catalog::ClassicalGroup;
using catalog::SlotTarget;
using lie::Reality;

namespace {

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

bool via_block(const SliceCandidate& s, int b) {
  const auto tail = "via block" + std::to_string(b);
  return s.factor_map.size() >= tail.size() && s.factor_map.compare(s.factor_map.size() - tail.size(), tail.size(), tail) == 0;
}

catalog::NamedRep defining(const std::string& name, const ClassicalGroup& g, Reality r) {
  return catalog::make_rep(name, catalog::parse_group(g.name()), {catalog::defining_weight(g)}, r);
}

SubgroupData block(std::string name, ClassicalGroup ambient, std::vector<ClassicalGroup> factors,
                   std::vector<std::vector<SlotTarget>> slots) {
  BlockEmbedding e{name, ambient, std::move(factors), std::move(slots)};
  return {std::move(name), e.branching()};
}

// Spin(7) inside Spin(9): through Spin(8), optionally twisted by a triality
// automorphism permuting the fundamental coordinates of D4.
SubgroupData spin7_in_spin9(std::string name, std::optional<std::pair<int, int>> triality) {
  const ClassicalGroup so9{Classical::SO, 9}, so8{Classical::SO, 8}, so7{Classical::SO, 7};
  auto map = [=](const lie::Weight& w) {
    auto d4 = catalog::from_natural_eps(so8, catalog::natural_eps(so9, w));
    if (triality) std::swap(d4.c[triality->first], d4.c[triality->second]);
    auto eps = catalog::natural_eps(so8, d4);
    eps.pop_back();
    return catalog::from_natural_eps(so7, eps);
  };
  return {name, lie::Branching(name, so9.algebra(), so7.algebra(), map)};
}

std::optional<ContainmentQuestion> sphere4(const SliceCandidate& s) {
  const ClassicalGroup sp2{Classical::Sp, 2}, sp1{Classical::Sp, 1}, u1{Classical::U, 1};
  ContainmentQuestion q;
  q.ambient = "Sp(2)";
  q.ambient_reps = {defining("H^2", sp2, Reality::Quaternionic), defining("R^5", {Classical::SO, 5}, Reality::Real)};
  q.h_v = block("diagonal Sp(1)", sp2, {sp1}, {{{0, 0}}, {{0, 0}}});
  const int b = via_block(s, 0) ? 0 : via_block(s, 1) ? 1 : -1;
  if (b < 0) return std::nullopt;
  if (starts_with(s.pair, "SU(2)")) {
    std::vector<std::vector<SlotTarget>> slots(2);
    slots[1 - b] = {{0, 0}};
    q.k = block("Sp(1) factor " + std::to_string(1 - b), sp2, {sp1}, slots);
  } else if (starts_with(s.pair, "SO(3)")) {
    std::vector<std::vector<SlotTarget>> slots(2);
    slots[b] = {{0, 0}};
    slots[1 - b] = {{1, 0}};
    q.k = block("T^1 x Sp(1)", sp2, {u1, sp1}, slots);
  } else {
    return std::nullopt;
  }
  return q;
}

std::optional<ContainmentQuestion> sphere8(const SliceCandidate& s) {
  if (!starts_with(s.pair, "Spin(8) half_spin")) return std::nullopt;
  const bool plus = s.pair.find("(+)") != std::string::npos;
  ContainmentQuestion q;
  q.ambient = "Spin(9)";
  q.ambient_reps = {defining("R^9", {Classical::SO, 9}, Reality::Real)};
  q.h_v = spin7_in_spin9("Spin(7) standard", std::nullopt);
  q.k = spin7_in_spin9(plus ? "Spin(7) via triality (+)" : "Spin(7) via triality (-)",
                       std::make_pair(0, plus ? 3 : 2));
  return q;
}

// U(n-1) = stabilizer of a tangent line in S(U(1) x U(n)).
SubgroupData cp_tangent_stabilizer(int n) {
  const ClassicalGroup g{Classical::SU, n + 1}, u1{Classical::U, 1};
  std::vector<ClassicalGroup> f{u1};
  if (n - 1 >= 2) f.push_back({Classical::SU, n - 1});
  std::vector<std::vector<SlotTarget>> slots(n + 1);
  slots[0] = {{0, 0, n - 1}};
  slots[1] = {{0, 0, n - 1}};
  for (int i = 2; i <= n; ++i) {
    slots[i] = {{0, 0, -2}};
    if (n - 1 >= 2) slots[i].push_back({1, i - 2, 1});
  }
  return block("U(" + std::to_string(n - 1) + ")", g, f, slots);
}

std::optional<ContainmentQuestion> complex_proj(int n, const SliceCandidate& s) {
  const ClassicalGroup g{Classical::SU, n + 1}, u1{Classical::U, 1};
  ContainmentQuestion q;
  q.ambient = g.name();
  q.ambient_reps = {defining("C^" + std::to_string(n + 1), g, Reality::Complex)};
  q.h_v = cp_tangent_stabilizer(n);
  if (starts_with(s.pair, "SO(2)")) {
    std::vector<std::vector<SlotTarget>> slots(n + 1);
    for (int i = 1; i <= n; ++i) slots[i] = {{0, i - 1}};
    q.k = block("SU(" + std::to_string(n) + ")", g, {{Classical::SU, n}}, slots);
    return q;
  }
  if (!starts_with(s.pair, "U(")) return std::nullopt;
  // Stabilizer of a vector under A -> det(A)^k A.
  const int k = s.twist;
  std::vector<ClassicalGroup> f{u1};
  if (n - 1 >= 2) f.push_back({Classical::SU, n - 1});
  std::vector<std::vector<SlotTarget>> slots(n + 1);
  slots[0] = {{0, 0, -(n - 1)}};
  if (k != 0) slots[1] = {{0, 0, -(n - 1) * k}};
  for (int i = 2; i <= n; ++i) {
    if (k + 1 != 0) slots[i] = {{0, 0, k + 1}};
    if (n - 1 >= 2) slots[i].push_back({1, i - 2, 1});
  }
  q.k = block("K for det twist " + std::to_string(k), g, f, slots);
  return q;
}

std::optional<ContainmentQuestion> quat_proj(int n, const SliceCandidate& s) {
  const ClassicalGroup g{Classical::Sp, n + 1}, sp1{Classical::Sp, 1}, u1{Classical::U, 1}, spn{Classical::Sp, n};
  ContainmentQuestion q;
  q.ambient = g.name();
  q.ambient_reps = {defining("H^" + std::to_string(n + 1), g, Reality::Quaternionic)};
  {
    std::vector<ClassicalGroup> f{sp1};
    if (n >= 2) f.push_back({Classical::Sp, n - 1});
    std::vector<std::vector<SlotTarget>> slots(n + 1);
    slots[0] = slots[1] = {{0, 0}};
    for (int i = 2; i <= n; ++i) slots[i] = {{1, i - 2}};
    q.h_v = block(n >= 2 ? "Sp(1)_diag x Sp(" + std::to_string(n - 1) + ")" : std::string("Sp(1)_diag"), g, f, slots);
  }
  std::vector<std::vector<SlotTarget>> slots(n + 1);
  if (via_block(s, 0) && starts_with(s.pair, "SU(2)")) {
    for (int i = 1; i <= n; ++i) slots[i] = {{0, i - 1}};
    q.k = block(spn.name(), g, {spn}, slots);
  } else if (via_block(s, 0) && starts_with(s.pair, "SO(3)")) {
    slots[0] = {{0, 0}};
    for (int i = 1; i <= n; ++i) slots[i] = {{1, i - 1}};
    q.k = block("T^1 x " + spn.name(), g, {u1, spn}, slots);
  } else if (via_block(s, 1) && (starts_with(s.pair, "Sp(") || starts_with(s.pair, "SU(2)"))) {
    std::vector<ClassicalGroup> f{sp1};
    if (n >= 2) f.push_back({Classical::Sp, n - 1});
    slots[0] = {{0, 0}};
    for (int i = 2; i <= n; ++i) slots[i] = {{1, i - 2}};
    q.k = block(n >= 2 ? "Sp(1) x Sp(" + std::to_string(n - 1) + ")" : std::string("Sp(1)"), g, f, slots);
  } else if (via_block(s, 1) && starts_with(s.pair, "SO(3)") && n == 1) {
    slots[0] = {{0, 0}};
    slots[1] = {{1, 0}};
    q.k = block("Sp(1) x T^1", g, {sp1, u1}, slots);
  } else {
    return std::nullopt;
  }
  return q;
}

}  // namespace

std::optional<ContainmentQuestion> containment_question(const CrossSpace& c, const SliceCandidate& s) {
  switch (c.kind) {
    case CrossKind::Sphere:
      if (c.n == 4) return sphere4(s);
      if (c.n == 8) return sphere8(s);
      return std::nullopt;
    case CrossKind::ComplexProj: return c.n >= 2 ? complex_proj(c.n, s) : std::nullopt;
    case CrossKind::QuatProj: return quat_proj(c.n, s);
    default: return std::nullopt;
  }
}

std::optional<WitnessModel> witness_for(const CrossSpace& c, const SliceCandidate& s) {
  switch (c.kind) {
    case CrossKind::Sphere:
      if (c.n == 2 && s.twist == 2)
        return WitnessModel{"so3-orbit-cp2", "S^2 ≅ CP^1", "SO(3), SU(2)", "SO(2), U(1)", "CP^2",
                            "ν(e^{iθ}) = e^{2iθ}", 4};
      break;
    case CrossKind::RealProj:
      if (c.n == 2 && s.twist == 2)
        return WitnessModel{"veronese-rp2-s4", "RP^2", "SO(3)", "S(O(1)×O(2))", "S^4", "ν: O(2)→O(2)/ℤ₂", 4};
      break;
    case CrossKind::ComplexProj:
      if (c.n == 2 && starts_with(s.pair, "SO(3)"))
        return WitnessModel{"cp2-orbit-s7-su3", "CP^2", "SU(3)", "U(2)", "S^7", "ν: U(2)→SU(2)/ℤ₂", 7};
      break;
    case CrossKind::QuatProj:
      if (c.n == 2 && starts_with(s.pair, "SO(5)"))
        return WitnessModel{"veronese-hp2-s13", "HP^2", "Sp(3)", "Sp(1)×Sp(2)", "S^13", "ν: Sp(1)·Sp(2)→SO(5)", 13};
      break;
    case CrossKind::CayleyPlane:
      if (starts_with(s.pair, "SO(9)"))
        return WitnessModel{"veronese-cap2-s25", "CaP^2", "F4", "Spin(9)", "S^25", "ν: Spin(9)→SO(9)", 25};
      break;
  }
  return std::nullopt;
}

}  // namespace cohom::cross
