#include "cohom/lie/root_system.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "cohom/error.hpp"

namespace cohom::lie {
namespace {

struct Frac {
  std::int64_t n = 0;
  std::int64_t d = 1;

  static Frac make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return g > 1 ? Frac{n / g, d / g} : Frac{n, d};
  }
  Frac operator+(Frac o) const { return make(n * o.d + o.n * d, d * o.d); }
  Frac operator-(Frac o) const { return make(n * o.d - o.n * d, d * o.d); }
  Frac operator*(Frac o) const { return make(n * o.n, d * o.d); }
  Frac operator/(Frac o) const { return make(n * o.d, d * o.n); }
};

using FracMatrix = std::vector<std::vector<Frac>>;

FracMatrix invert(FracMatrix m) {
  const std::size_t n = m.size();
  FracMatrix inv(n, std::vector<Frac>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Frac{1, 1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].n == 0) ++piv;
    if (piv == n) throw Error("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Frac p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] / p;
      inv[col][j] = inv[col][j] / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].n == 0) continue;
      const Frac f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

// Symmetric matrix (alpha_i, alpha_j), Bourbaki numbering, short roots of length^2 2.
std::vector<std::vector<int>> root_gram(SimpleType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) {
    b[i][j] = v;
    b[j][i] = v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) b[i][i] = 4;
      b[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      b[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      b[0][0] = 2;
      b[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return b;
}

}  // namespace

RootSystem::RootSystem(SimpleType type) : type_(type) {
  const int n = type.rank;
  const auto b = root_gram(type);
  cartan_.assign(n * n, 0);
  length2_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    length2_[i] = b[i][i];
    for (int j = 0; j < n; ++j) cartan_[i * n + j] = 2 * b[i][j] / b[j][j];
  }

  // Positive roots by raising simple roots along root strings.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan(j, i);
        int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          auto up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  pos_roots_.assign(known.begin(), known.end());
  std::stable_sort(pos_roots_.begin(), pos_roots_.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
  for (const auto& r : pos_roots_) {
    Weight w(std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) w[k] += r[j] * cartan(j, k);
    pos_roots_fund_.push_back(std::move(w));
    int len2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) len2 += r[i] * r[j] * b[i][j];
    std::vector<int> co(n, 0);
    for (int i = 0; i < n; ++i) co[i] = r[i] * length2_[i] / len2;
    coroot_coeffs_.push_back(std::move(co));
  }

  FracMatrix c(n, std::vector<Frac>(n));
  FracMatrix ct(n, std::vector<Frac>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      c[i][j] = Frac{cartan(i, j), 1};
      ct[i][j] = Frac{cartan(j, i), 1};
    }

  // Gram matrix of fundamental weights: C G = diag(|alpha_j|^2 / 2).
  const FracMatrix cinv = invert(c);
  FracMatrix g(n, std::vector<Frac>(n));
  std::int64_t lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g[i][j] = cinv[i][j] * Frac::make(length2_[j], 2);
      lcm = std::lcm(lcm, g[i][j].d);
    }
  form_scale_ = lcm;
  gram_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_[i * n + j] = g[i][j].n * (lcm / g[i][j].d);

  const FracMatrix ctinv = invert(ct);
  lcm = 1;
  for (const auto& row : ctinv)
    for (const auto& f : row) lcm = std::lcm(lcm, f.d);
  root_scale_ = lcm;
  root_coords_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) root_coords_[i * n + j] = ctinv[i][j].n * (lcm / ctinv[i][j].d);
}

const RootSystem& RootSystem::of(SimpleType type) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[type];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

std::int64_t RootSystem::form(const Weight& a, const Weight& b) const {
  const int n = rank();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += static_cast<std::int64_t>(a[i]) * gram_[i * n + j] * b[j];
  }
  return s;
}

std::vector<std::int64_t> RootSystem::simple_root_coords(const Weight& w) const {
  const int n = rank();
  std::vector<std::int64_t> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += root_coords_[i * n + j] * w[j];
  return out;
}

std::int64_t RootSystem::height(const Weight& w) const {
  const auto c = simple_root_coords(w);
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight out = w;
  const int wi = w[i];
  if (wi == 0) return out;
  for (int k = 0; k < rank(); ++k) out[k] -= wi * cartan(i, k);
  return out;
}

bool RootSystem::dominant(const Weight& w) const {
  for (int i = 0; i < rank(); ++i)
    if (w[i] < 0) return false;
  return true;
}

Weight RootSystem::to_dominant(const Weight& w) const {
  Weight cur = w;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank(); ++i)
      if (cur[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return cur;
    cur = reflect(cur, neg);
  }
}

std::vector<Weight> RootSystem::orbit(const Weight& w) const {
  std::set<Weight> seen{to_dominant(w)};
  std::vector<Weight> out{*seen.begin()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank(); ++i) {
      if (out[k][i] <= 0) continue;  // only walk downwards from the dominant chamber
      Weight r = reflect(out[k], i);
      if (seen.insert(r).second) out.push_back(std::move(r));
    }
  }
  return out;
}

std::int64_t RootSystem::pairing_two_rho_coroot(const Weight& w) const {
  std::int64_t s = 0;
  for (const auto& co : coroot_coeffs_)
    for (int i = 0; i < rank(); ++i) s += static_cast<std::int64_t>(co[i]) * w[i];
  return s;
}

}  // namespace cohom::lie
