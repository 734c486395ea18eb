#include <algorithm>

#include "cohom/catalog/group_spec.hpp"
#include "cohom/error.hpp"
#include "cohom/wallach/wallach.hpp"

namespace cohom::wallach {

namespace {

using catalog::special_unitary_algebra;
using catalog::sum;

std::string su(int k) { return "su(" + std::to_string(k) + ")"; }

// R^r + listed simple parts, skipping su(1).
std::string join(int torus, std::vector<std::string> parts) {
  std::string s = torus == 0 ? "" : torus == 1 ? "R" : "R^" + std::to_string(torus);
  for (const auto& p : parts) {
    if (p == "su(1)") continue;
    s += (s.empty() ? "" : "+") + p;
  }
  return s.empty() ? "0" : s;
}

ReductiveAlgebra algebra(int torus, std::vector<ReductiveAlgebra> parts) {
  ReductiveAlgebra a = ReductiveAlgebra::torus(torus);
  for (const auto& p : parts) a = sum(p, a);
  return a;
}

ReductiveAlgebra su_alg(int k) { return k >= 2 ? special_unitary_algebra(k) : ReductiveAlgebra{}; }

}  // namespace

std::vector<CandidateHPrime> su_row_candidates(int m) {
  if (m < 3) throw Error("SU(m) candidate table needs m >= 3, got " + std::to_string(m));
  const int dim_b = 2 * (m - 1), dim_m = 4 * (m - 1);
  const auto k_alg = algebra(1, {su_alg(m - 2)});
  auto row = [&](int idx, std::string n_name, ReductiveAlgebra n_alg, int torus, std::vector<std::string> hp,
                 std::vector<ReductiveAlgebra> hp_alg, int dim_v) {
    CandidateHPrime c;
    c.row = idx;
    c.n_ideal = std::move(n_name);
    c.n_algebra = std::move(n_alg);
    c.h_prime = join(torus, hp);
    c.h_prime_algebra = algebra(torus, hp_alg);
    c.dim_v_prime = dim_v;
    return c;
  };
  std::vector<CandidateHPrime> rows{
      row(1, "0", {}, 1, {su(m - 1)}, {su_alg(m - 1)}, 2 * (m - 1)),
      row(2, "k", k_alg, 2, {su(m - 2)}, {su_alg(m - 2)}, 2),
      row(3, "k", k_alg, 1, {su(2), su(m - 2)}, {su_alg(2), su_alg(m - 2)}, 4),
      row(4, "R", ReductiveAlgebra::torus(1), 1, {su(m - 1)}, {su_alg(m - 1)}, 2 * (m - 1)),
      row(5, "R", ReductiveAlgebra::torus(1), 1, {"so(4)"}, {catalog::orthogonal_algebra(4)}, 4),
      row(6, join(0, {su(m - 2)}), su_alg(m - 2), 1, {su(2), su(m - 2)}, {su_alg(2), su_alg(m - 2)}, 4),
      row(7, join(0, {su(m - 2)}), su_alg(m - 2), 0, {su(2), su(m - 2)}, {su_alg(2), su_alg(m - 2)}, 3),
  };
  rows[5].h_prime = join(0, {"u(2)", su(m - 2)});
  rows[4].applicable = m == 4;
  if (m == 3) {
    // u(2) + su(1) is the first row again.
    rows.erase(rows.begin() + 5);
    rows.erase(rows.begin() + 4);
  }
  for (auto& c : rows) {
    if (c.applicable && c.h_prime_algebra.dimension() - k_alg.dimension() != c.dim_v_prime - 1)
      throw Error("candidate row " + std::to_string(c.row) + ": h'/k is not a sphere of dimension dim V' - 1");
    c.maximal_rank = c.h_prime_algebra.rank() == m - 1;
    c.frankel = triple::frankel_check(dim_b, dim_m - c.dim_v_prime, dim_m);
    if (!c.applicable) {
      c.excluded = true;
      c.reason = "needs m = 4";
    } else if (c.maximal_rank && !c.frankel) {
      c.excluded = true;
      c.reason = "maximal rank, so B' is totally geodesic, and dim B + dim B' = " +
                 std::to_string(dim_b + dim_m - c.dim_v_prime) + " >= dim M = " + std::to_string(dim_m);
    }
  }
  return rows;
}

std::vector<int> compatible_twists(int m, int window) {
  if (m < 3) throw Error("twist constraint needs m >= 3");
  std::vector<int> out;
  for (int j = -window; j <= window; ++j) {
    // Torus of k: diag(theta, phi, s) with s the trace of the lower block,
    // theta + phi + s = 0 and (j+1) phi + j s = 0.
    const int theta = -1, phi = -j, s = j + 1;
    bool ok;
    if (m >= 4) {
      ok = s == 0;  // h' = su(2) + su(m-2) is traceless on both blocks
    } else {
      // su(2) acting on C^3 always has weight 0 among {x, 0, -x}.
      std::vector<int> w{theta, phi, s};
      std::sort(w.begin(), w.end());
      ok = w[1] == 0 && w[0] == -w[2];
    }
    if (ok) out.push_back(j);
  }
  return out;
}

int forced_twist(int m) {
  const auto js = compatible_twists(m);
  // j = 0 and j = -1 differ by swapping the last two diagonal slots, which
  // normalises h; keep -1.
  if (js.empty()) throw Error("no compatible twist");
  for (int j : js)
    if (j != -1 && !(m == 3 && j == 0)) throw Error("unexpected compatible twist " + std::to_string(j));
  return -1;
}

ForcedTriple forced_triple(int m) {
  if (m < 3) throw Error("forced triple needs m >= 3");
  const std::string tail = m - 2 >= 2 ? "xSU(" + std::to_string(m - 2) + ")" : "";
  return {"S(U(1)xU(" + std::to_string(m - 1) + "))", "S(U(1)xU(1))" + tail, "SU(2)" + tail};
}

}  // namespace cohom::wallach
