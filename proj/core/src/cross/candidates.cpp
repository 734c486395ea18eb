#include <algorithm>

#include "cohom/cross/cross.hpp"

namespace cohom::cross {

using lie::Character;
using lie::Weight;

bool SymmetryAction::involutive() const {
  auto trivial_square = [](const std::vector<Rational>& ph) {
    return std::all_of(ph.begin(), ph.end(), [](const Rational& q) { return (q * Rational(2)).frac() == Rational(0); });
  };
  return trivial_square(tau_phases) && trivial_square(nu_phases);
}

std::optional<SymmetryAction> circle_symmetry(int k) {
  if (k == 0) return std::nullopt;
  // Rotation by pi when k is odd (an involution), by pi/k otherwise.
  const Rational theta = (k % 2) ? Rational(1, 2) : Rational(1, 2 * std::abs(k));
  SymmetryAction s;
  s.element = "rotation by 2pi*" + theta.str();
  s.exponent = {theta};
  for (int w : {1, -1}) s.tau_phases.push_back((Rational(w) * theta).frac());
  for (int w : {k, -k}) s.nu_phases.push_back((Rational(w) * theta).frac());
  return s;
}

Finding sigma_parity_check(const std::optional<SymmetryAction>& s) {
  if (!s) return Finding::inconclusive("sigma-parity", "no element acting as -1 on the slice");
  for (const auto& q : s->nu_phases)
    if (!(q == Rational(1, 2))) return Finding::inconclusive("sigma-parity", s->element + " is not -1 on the slice");
  // Phases of S^2(tau^*): sums of two tangent phases, negated.
  for (std::size_t i = 0; i < s->tau_phases.size(); ++i)
    for (std::size_t j = i; j < s->tau_phases.size(); ++j) {
      const Rational sq = (-(s->tau_phases[i] + s->tau_phases[j])).frac();
      for (const auto& n : s->nu_phases)
        if ((sq + n).frac() == Rational(0))
          return Finding::inconclusive("sigma-parity", s->element + " leaves room for a second fundamental form");
    }
  return {Verdict::TotallyGeodesic, "sigma-parity", s->element + " forces h = -h"};
}

Finding sigma_parity_check(int k_twist) { return sigma_parity_check(circle_symmetry(k_twist)); }

std::int64_t isotropy_invariants(const CrossSpace& c) {
  const auto tau = c.presentation.isotropy.complexified();
  return lie::trivial_multiplicity(lie::tensor(lie::sym2_dual(tau), tau));
}

Finding isotropy_slice_check(const CrossSpace& c) {
  const auto m = isotropy_invariants(c);
  const auto detail = "trivial multiplicity of S^2(tau^*) (x) tau is " + std::to_string(m);
  if (m == 0) return {Verdict::TotallyGeodesic, "isotropy-invariants", detail};
  return Finding::inconclusive("isotropy-invariants", detail);
}

bool real_equivalent(const SliceRep& a, const SliceRep& b) {
  return a.rep.character.algebra() == b.rep.character.algebra() && a.rep.complexified() == b.rep.complexified();
}

namespace {

bool descends(const catalog::CompactGroupSpec& h, const Character& c) {
  for (const auto& e : h.center_data) {
    if (e.name != "cover-kernel") continue;
    for (const auto& [w, m] : c.weights())
      if (!(homogeneous::pairing(w, e.exponent) == Rational(0))) return false;
  }
  return true;
}

// Action of the non-identity component of S(O(1) x O(n)) on weights of its
// identity component.
Weight component_action(int n, const lie::ReductiveAlgebra& alg, Weight w) {
  if (n % 2) return w;
  if (n == 2) return -w;
  if (n == 4) return Weight{w[1], w[0]};
  if (n == 6) return Weight{w[2], w[1], w[0]};
  const int r = alg.rank();
  std::swap(w.c[r - 2], w.c[r - 1]);
  return w;
}

bool component_stable(const CrossSpace& c, const Character& ch) {
  if (c.kind != CrossKind::RealProj) return true;
  Character::Map moved;
  for (const auto& [w, m] : ch.weights()) moved[component_action(c.n, ch.algebra(), w)] += m;
  return Character(ch.algebra(), moved) == ch;
}

Character scale_torus(const Character& c, int d) {
  const auto& alg = c.algebra();
  const int t0 = alg.offset(alg.simples.size());
  Character::Map m;
  for (const auto& [w, k] : c.weights()) {
    Weight x = w;
    for (int i = t0; i < alg.rank(); ++i) x[i] *= d;
    m[x] += k;
  }
  return Character(alg, m);
}

}  // namespace

std::vector<SliceCandidate> enumerate_slice_candidates(const CrossSpace& c, const catalog::Catalog& cat) {
  const auto& h = c.presentation.stabilizer;
  std::vector<SliceCandidate> out;
  for (const auto& cand : cat.sphere_transitive_candidates(h)) {
    SliceCandidate s;
    s.pair = cand.pair.group.name + " " + cand.pair.rep.name;
    s.factor_map = cand.factor_map;
    s.twist = cand.twist;
    s.nu.stabilizer = h;
    s.nu.rep = cand.lifted;
    s.nu.rep.group = h;
    auto ch = s.nu.rep.character;
    if (!descends(h, ch)) {
      // A circle quotient only needs the right covering degree.
      const bool circle = cand.pair.group.algebra == lie::ReductiveAlgebra::torus(1) && !h.algebra.semisimple();
      int d = 2;
      while (circle && d <= 12 && !descends(h, scale_torus(ch, d))) ++d;
      if (!circle || d > 12) continue;
      ch = scale_torus(ch, d);
      s.twist = d;
    }
    s.nu.rep.character = ch;
    if (!component_stable(c, s.nu.rep.complexified())) continue;
    if (cand.pair.group.algebra == lie::ReductiveAlgebra::torus(1) && s.twist == 0) s.twist = 1;
    s.nu.normal_dim = s.nu.rep.real_dim();
    if (std::any_of(out.begin(), out.end(), [&](const SliceCandidate& o) { return real_equivalent(o.nu, s.nu); }))
      continue;
    out.push_back(std::move(s));
  }
  // Determinant twists identified as real representations (nu_k ~ nu_{-1-k}
  // for U(2)): record the partner the catalog merged away.
  for (auto& s : out) {
    if (s.pair.rfind("U(", 0) != 0) continue;
    const int n = h.algebra.rank();
    const int t0 = h.algebra.offset(h.algebra.simples.size());
    for (int j = -catalog::Catalog::kDefaultTwistWindow; j <= catalog::Catalog::kDefaultTwistWindow; ++j) {
      if (j == s.twist) continue;
      Character::Map m;
      for (const auto& [w, k] : s.nu.rep.character.weights()) {
        Weight x = w;
        x[t0] += n * (j - s.twist);
        m[x] += k;
      }
      SliceRep other = s.nu;
      other.rep.character = Character(h.algebra, m);
      if (real_equivalent(other, s.nu)) s.identified.push_back("det twist " + std::to_string(j));
    }
  }
  return out;
}

}  // namespace cohom::cross
