#include "cohom/lie/character.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cohom/error.hpp"
#include "cohom/lie/root_system.hpp"

namespace cohom::lie {
namespace {

Weight slice(const Weight& w, int off, int len) {
  return Weight(std::vector<int>(w.c.begin() + off, w.c.begin() + off + len));
}

void check_length(const ReductiveAlgebra& alg, const Weight& w) {
  if (static_cast<int>(w.size()) != alg.rank()) {
    throw Error("weight " + w.str() + " has length " + std::to_string(w.size()) +
                ", algebra " + alg.name() + " has rank " + std::to_string(alg.rank()));
  }
}

// Dominant weights of V(hw) with multiplicities (Freudenthal).
Character::Map dominant_multiplicities(const RootSystem& rs, const Weight& hw) {
  const auto& roots = rs.positive_roots_fund();
  std::set<Weight> found{hw};
  std::vector<Weight> queue{hw};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& a : roots) {
      Weight mu = queue[k];
      for (int i = 0; i < rs.rank(); ++i) mu[i] -= a[i];
      if (rs.dominant(mu) && found.insert(mu).second) queue.push_back(mu);
    }
  }
  std::vector<Weight> order(found.begin(), found.end());
  std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
    const auto hx = rs.height(x), hy = rs.height(y);
    return hx != hy ? hx > hy : x > y;
  });

  const Weight rho = rs.rho();
  auto shifted = [&](const Weight& w) {
    Weight s = w;
    for (int i = 0; i < rs.rank(); ++i) s[i] += rho[i];
    return s;
  };
  const Weight top = shifted(hw);
  const std::int64_t top_norm = rs.form(top, top);

  Character::Map mult;
  mult[hw] = 1;
  for (const auto& mu : order) {
    if (mu == hw) continue;
    std::int64_t num = 0;
    for (const auto& a : roots) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        for (int i = 0; i < rs.rank(); ++i) nu[i] += a[i];
        auto it = mult.find(rs.to_dominant(nu));
        if (it == mult.end() || it->second == 0) break;
        num += it->second * rs.form(nu, a);
      }
    }
    const Weight s = shifted(mu);
    const std::int64_t den = top_norm - rs.form(s, s);
    if (den <= 0 || (2 * num) % den != 0) {
      throw Error("Freudenthal recursion failed for " + rs.type().name() + " at " + mu.str());
    }
    mult[mu] = 2 * num / den;
  }
  for (auto it = mult.begin(); it != mult.end();) {
    it = it->second == 0 ? mult.erase(it) : std::next(it);
  }
  return mult;
}

Character::Map expand_orbits(const RootSystem& rs, const Character::Map& dominant) {
  Character::Map out;
  for (const auto& [w, m] : dominant)
    for (auto& x : rs.orbit(w)) out[x] += m;
  return out;
}

// Cartesian product of per-block weight maps, then torus charges appended.
Character::Map combine_blocks(const std::vector<Character::Map>& blocks, const std::vector<int>& charges) {
  Character::Map acc{{Weight{}, 1}};
  for (const auto& b : blocks) {
    Character::Map next;
    for (const auto& [w1, m1] : acc)
      for (const auto& [w2, m2] : b) {
        Weight w = w1;
        w.c.insert(w.c.end(), w2.c.begin(), w2.c.end());
        next[w] += m1 * m2;
      }
    acc = std::move(next);
  }
  Character::Map out;
  for (auto& [w, m] : acc) {
    Weight x = w;
    x.c.insert(x.c.end(), charges.begin(), charges.end());
    out[x] = m;
  }
  return out;
}

// Dominant part (all simple blocks dominant) of the irreducible.
Character::Map irreducible_dominant(const ReductiveAlgebra& alg, const Weight& hw) {
  std::vector<Character::Map> blocks;
  for (std::size_t b = 0; b < alg.simples.size(); ++b) {
    const auto& rs = RootSystem::of(alg.simples[b]);
    blocks.push_back(dominant_multiplicities(rs, slice(hw, alg.offset(b), rs.rank())));
  }
  const int ss = alg.offset(alg.simples.size());
  return combine_blocks(blocks, std::vector<int>(hw.c.begin() + ss, hw.c.end()));
}

bool all_blocks_dominant(const ReductiveAlgebra& alg, const Weight& w) {
  const int ss = alg.offset(alg.simples.size());
  for (int i = 0; i < ss; ++i)
    if (w[i] < 0) return false;
  return true;
}

// Height over all simple blocks, with a common scale.
std::int64_t total_height(const ReductiveAlgebra& alg, const Weight& w) {
  std::int64_t scale = 1;
  for (const auto& s : alg.simples) scale = std::lcm(scale, RootSystem::of(s).root_coord_scale());
  std::int64_t h = 0;
  for (std::size_t b = 0; b < alg.simples.size(); ++b) {
    const auto& rs = RootSystem::of(alg.simples[b]);
    h += rs.height(slice(w, alg.offset(b), rs.rank())) * (scale / rs.root_coord_scale());
  }
  return h;
}

void require_same_algebra(const Character& a, const Character& b) {
  if (!(a.algebra() == b.algebra())) {
    throw Error("algebra mismatch: " + a.algebra().name() + " vs " + b.algebra().name());
  }
}

}  // namespace

const char* to_string(Reality r) {
  switch (r) {
    case Reality::Real: return "real";
    case Reality::Complex: return "complex";
    case Reality::Quaternionic: return "quaternionic";
  }
  return "?";
}

Reality reality_from_string(const std::string& s) {
  if (s == "real") return Reality::Real;
  if (s == "complex") return Reality::Complex;
  if (s == "quaternionic") return Reality::Quaternionic;
  throw Error("unknown reality type '" + s + "'");
}

Character::Character(ReductiveAlgebra algebra) : algebra_(std::move(algebra)) {}

Character::Character(ReductiveAlgebra algebra, Map weights)
    : algebra_(std::move(algebra)), weights_(std::move(weights)) {
  for (auto it = weights_.begin(); it != weights_.end();) {
    check_length(algebra_, it->first);
    if (it->second < 0) throw Error("negative multiplicity at " + it->first.str());
    if (it->second == 0) {
      it = weights_.erase(it);
    } else {
      dim_ += it->second;
      ++it;
    }
  }
}

Character Character::trivial(const ReductiveAlgebra& algebra) {
  return Character(algebra, {{Weight(std::vector<int>(algebra.rank(), 0)), 1}});
}

std::int64_t Character::multiplicity(const Weight& w) const {
  auto it = weights_.find(w);
  return it == weights_.end() ? 0 : it->second;
}

bool Character::weyl_invariant() const {
  for (std::size_t b = 0; b < algebra_.simples.size(); ++b) {
    const auto& rs = RootSystem::of(algebra_.simples[b]);
    const int off = algebra_.offset(b);
    for (const auto& [w, m] : weights_) {
      for (int i = 0; i < rs.rank(); ++i) {
        Weight local = rs.reflect(slice(w, off, rs.rank()), i);
        Weight image = w;
        std::copy(local.c.begin(), local.c.end(), image.c.begin() + off);
        if (multiplicity(image) != m) return false;
      }
    }
  }
  return true;
}

Character Character::dual() const {
  Map out;
  for (const auto& [w, m] : weights_) out[-w] = m;
  return Character(algebra_, std::move(out));
}

Character irreducible_character(const ReductiveAlgebra& algebra, const Weight& hw) {
  check_length(algebra, hw);
  if (!all_blocks_dominant(algebra, hw)) {
    throw Error("highest weight " + hw.str() + " is not dominant for " + algebra.name());
  }
  std::vector<Character::Map> blocks;
  for (std::size_t b = 0; b < algebra.simples.size(); ++b) {
    const auto& rs = RootSystem::of(algebra.simples[b]);
    blocks.push_back(expand_orbits(rs, dominant_multiplicities(rs, slice(hw, algebra.offset(b), rs.rank()))));
  }
  const int ss = algebra.offset(algebra.simples.size());
  return Character(algebra, combine_blocks(blocks, std::vector<int>(hw.c.begin() + ss, hw.c.end())));
}

__extension__ typedef __int128 wide_int;

std::int64_t weyl_dimension(const ReductiveAlgebra& algebra, const Weight& hw) {
  check_length(algebra, hw);
  if (!all_blocks_dominant(algebra, hw)) {
    throw Error("highest weight " + hw.str() + " is not dominant for " + algebra.name());
  }
  wide_int num = 1, den = 1;
  for (std::size_t b = 0; b < algebra.simples.size(); ++b) {
    const auto& rs = RootSystem::of(algebra.simples[b]);
    Weight lam = slice(hw, algebra.offset(b), rs.rank());
    Weight rho = rs.rho();
    Weight shifted = lam + rho;
    for (const auto& a : rs.positive_roots_fund()) {
      num *= rs.form(shifted, a);
      den *= rs.form(rho, a);
      wide_int x = num < 0 ? -num : num, y = den;
      while (y != 0) {
        wide_int t = x % y;
        x = y;
        y = t;
      }
      if (x > 1) {
        num /= x;
        den /= x;
      }
    }
  }
  if (den != 1) throw Error("Weyl dimension formula did not produce an integer");
  return static_cast<std::int64_t>(num);
}

Reality irreducible_reality(const ReductiveAlgebra& algebra, const Weight& hw) {
  const Character c = irreducible_character(algebra, hw);
  if (!(c == c.dual())) return Reality::Complex;
  std::int64_t parity = 0;
  for (std::size_t b = 0; b < algebra.simples.size(); ++b) {
    const auto& rs = RootSystem::of(algebra.simples[b]);
    parity += rs.pairing_two_rho_coroot(slice(hw, algebra.offset(b), rs.rank()));
  }
  return parity % 2 == 0 ? Reality::Real : Reality::Quaternionic;
}

Character tensor(const Character& a, const Character& b) {
  require_same_algebra(a, b);
  Character::Map out;
  for (const auto& [w1, m1] : a.weights())
    for (const auto& [w2, m2] : b.weights()) out[w1 + w2] += m1 * m2;
  return Character(a.algebra(), std::move(out));
}

Character direct_sum(const Character& a, const Character& b) {
  require_same_algebra(a, b);
  Character::Map out = a.weights();
  for (const auto& [w, m] : b.weights()) out[w] += m;
  return Character(a.algebra(), std::move(out));
}

Character scaled(const Character& c, std::int64_t factor) {
  if (factor < 0) throw Error("negative scale factor");
  Character::Map out;
  for (const auto& [w, m] : c.weights()) out[w] = m * factor;
  return Character(c.algebra(), std::move(out));
}

Character sym2(const Character& c) {
  Character::Map out;
  const auto& ws = c.weights();
  for (auto i = ws.begin(); i != ws.end(); ++i) {
    out[i->first + i->first] += i->second * (i->second + 1) / 2;
    for (auto j = std::next(i); j != ws.end(); ++j) out[i->first + j->first] += i->second * j->second;
  }
  return Character(c.algebra(), std::move(out));
}

Character sym2_dual(const Character& c) { return sym2(c.dual()); }

Character lambda2(const Character& c) {
  Character::Map out;
  const auto& ws = c.weights();
  for (auto i = ws.begin(); i != ws.end(); ++i) {
    if (i->second > 1) out[i->first + i->first] += i->second * (i->second - 1) / 2;
    for (auto j = std::next(i); j != ws.end(); ++j) out[i->first + j->first] += i->second * j->second;
  }
  return Character(c.algebra(), std::move(out));
}

ReductiveAlgebra outer(const ReductiveAlgebra& a, const ReductiveAlgebra& b) {
  ReductiveAlgebra out = a;
  out.simples.insert(out.simples.end(), b.simples.begin(), b.simples.end());
  out.torus_rank += b.torus_rank;
  return out;
}

Character outer(const Character& a, const Character& b) {
  const auto& ga = a.algebra();
  const auto& gb = b.algebra();
  const int ssa = ga.offset(ga.simples.size());
  const int ssb = gb.offset(gb.simples.size());
  Character::Map out;
  for (const auto& [w1, m1] : a.weights())
    for (const auto& [w2, m2] : b.weights()) {
      Weight w;
      w.c.insert(w.c.end(), w1.c.begin(), w1.c.begin() + ssa);
      w.c.insert(w.c.end(), w2.c.begin(), w2.c.begin() + ssb);
      w.c.insert(w.c.end(), w1.c.begin() + ssa, w1.c.end());
      w.c.insert(w.c.end(), w2.c.begin() + ssb, w2.c.end());
      out[w] += m1 * m2;
    }
  return Character(outer(ga, gb), std::move(out));
}

Character complexification(const Character& c, Reality reality) {
  return reality == Reality::Real ? c : direct_sum(c, c.dual());
}

std::vector<std::pair<Weight, std::int64_t>> decompose(const Character& c) {
  if (!c.weyl_invariant()) {
    throw Error("character is not Weyl-invariant; cannot decompose");
  }
  const auto& alg = c.algebra();
  std::map<Weight, std::int64_t> remaining;
  for (const auto& [w, m] : c.weights())
    if (all_blocks_dominant(alg, w)) remaining[w] = m;

  std::vector<std::pair<Weight, std::int64_t>> out;
  while (!remaining.empty()) {
    auto best = remaining.begin();
    std::int64_t best_h = total_height(alg, best->first);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const std::int64_t h = total_height(alg, it->first);
      if (h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    const Weight hw = best->first;
    const std::int64_t m = best->second;
    if (m < 0) throw Error("negative multiplicity during extraction at " + hw.str());
    out.emplace_back(hw, m);
    for (const auto& [w, k] : irreducible_dominant(alg, hw)) {
      auto it = remaining.find(w);
      const std::int64_t left = (it == remaining.end() ? 0 : it->second) - m * k;
      if (left < 0) throw Error("extraction underflow at " + w.str());
      if (left == 0) {
        if (it != remaining.end()) remaining.erase(it);
      } else {
        it->second = left;
      }
    }
  }
  return out;
}

std::int64_t trivial_multiplicity(const Character& c) {
  std::int64_t n = 0;
  for (const auto& [hw, m] : decompose(c))
    if (hw.is_zero()) n += m;
  return n;
}

}  // namespace cohom::lie
