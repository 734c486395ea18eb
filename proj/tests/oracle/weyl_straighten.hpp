#pragma once

// Test-side oracle: decomposition multiplicities by Weyl straightening
// (Racah-Speiser), written against hand-entered Cartan matrices so it
// shares no code with the library's root-system machinery.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

// Cartan matrix, entry (i,j) = <alpha_i, alpha_j^vee>, Bourbaki order.
inline Matrix cartan(char family, int r) {
  Matrix c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 2][r - 1] = -2;  // long alpha_{r-1}, short alpha_r
      break;
    case 'C':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 1][r - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'E':
      link(0, 2); link(2, 3); link(3, 1); link(3, 4);
      for (int i = 4; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1); link(2, 3);
      c[1][2] = -2; c[2][1] = -1;
      break;
    case 'G':
      c[0][1] = -1; c[1][0] = -3;
      break;
    default: throw std::invalid_argument("unknown family");
  }
  return c;
}

struct Block {
  char family;
  int rank;
};

// Straighten mu + rho into the dominant chamber. Returns 0 if it lands on
// a wall, otherwise the sign and writes the highest weight to `out`.
inline int straighten(const Matrix& c, std::vector<int> v, std::vector<int>& out) {
  const int r = static_cast<int>(v.size());
  for (auto& x : v) x += 1;
  int sign = 1;
  for (int guard = 0; guard < 100000; ++guard) {
    int neg = -1;
    for (int i = 0; i < r; ++i) {
      if (v[i] == 0) return 0;
      if (v[i] < 0 && neg < 0) neg = i;
    }
    if (neg < 0) {
      out.resize(r);
      for (int i = 0; i < r; ++i) out[i] = v[i] - 1;
      return sign;
    }
    const int k = v[neg];
    for (int j = 0; j < r; ++j) v[j] -= k * c[neg][j];
    sign = -sign;
  }
  throw std::runtime_error("straightening did not terminate");
}

// Multiplicity of each irreducible (highest weight -> count) in a
// character given as weight -> multiplicity over the listed blocks plus
// `torus` trailing charges.
inline std::map<std::vector<int>, std::int64_t> decompose(
    const std::vector<Block>& blocks, int torus,
    const std::map<std::vector<int>, std::int64_t>& character) {
  std::vector<Matrix> cs;
  for (const auto& b : blocks) cs.push_back(cartan(b.family, b.rank));
  std::map<std::vector<int>, std::int64_t> res;
  for (const auto& [w, m] : character) {
    std::vector<int> hw;
    int sign = 1;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < blocks.size() && sign != 0; ++b) {
      std::vector<int> local(w.begin() + pos, w.begin() + pos + blocks[b].rank), out;
      sign *= straighten(cs[b], local, out);
      hw.insert(hw.end(), out.begin(), out.end());
      pos += blocks[b].rank;
    }
    if (sign == 0) continue;
    hw.insert(hw.end(), w.begin() + pos, w.begin() + pos + torus);
    res[hw] += sign * m;
  }
  for (auto it = res.begin(); it != res.end();) it = it->second == 0 ? res.erase(it) : std::next(it);
  return res;
}

inline std::int64_t trivial_count(const std::vector<Block>& blocks, int torus,
                                  const std::map<std::vector<int>, std::int64_t>& character) {
  int n = torus;
  for (const auto& b : blocks) n += b.rank;
  auto d = decompose(blocks, torus, character);
  auto it = d.find(std::vector<int>(n, 0));
  return it == d.end() ? 0 : it->second;
}

}  // namespace oracle
