#include "cohom/homogeneous/homogeneous.hpp"

#include <Eigen/Dense>
#include <cstdlib>
#include <numeric>

#include "cohom/catalog/classical.hpp"

namespace cohom::homogeneous {

using catalog::Classical;
using catalog::ClassicalGroup;
using lie::Character;
using lie::Reality;
using lie::Weight;

const char* to_string(CrossKind k) {
  switch (k) {
    case CrossKind::Sphere: return "sphere";
    case CrossKind::RealProj: return "real_proj";
    case CrossKind::ComplexProj: return "complex_proj";
    case CrossKind::QuatProj: return "quat_proj";
    case CrossKind::CayleyPlane: return "cayley_plane";
  }
  return "?";
}

std::string CrossSpace::label() const {
  const auto n_str = std::to_string(n);
  switch (kind) {
    case CrossKind::Sphere: return "S^" + n_str;
    case CrossKind::RealProj: return "RP^" + n_str;
    case CrossKind::ComplexProj: return "CP^" + n_str;
    case CrossKind::QuatProj: return "HP^" + n_str;
    case CrossKind::CayleyPlane: return "CaP^2";
  }
  return "?";
}

bool euler_positive(const HomogeneousSpace& x) { return x.stabilizer.rank() == x.group.rank(); }

std::optional<int> cohomogeneity_on_self(const HomogeneousSpace& x) {
  if (x.cohomogeneity) return x.cohomogeneity;
  if (x.dim() == 0) return 0;
  const auto& alg = x.stabilizer.algebra;
  if (!alg.simples.empty()) return std::nullopt;
  // Torus isotropy: generic orbits have the dimension of the real span of
  // the weights.
  const auto tau = x.isotropy.complexified();
  std::vector<Weight> ws;
  for (const auto& [w, m] : tau.weights())
    if (!w.is_zero()) ws.push_back(w);
  if (ws.empty()) return x.dim();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(ws.size()), alg.torus_rank);
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (int j = 0; j < alg.torus_rank; ++j) a(static_cast<Eigen::Index>(i), j) = ws[i][j];
  const int orbit = static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(a).rank());
  return x.dim() - orbit;
}

Rational pairing(const Weight& w, const std::vector<Rational>& e) {
  Rational s(0);
  for (std::size_t i = 0; i < e.size(); ++i) s = s + Rational(w[i]) * e[i];
  return s.frac();
}

std::optional<std::vector<Rational>> minus_identity_element(const Character& c) {
  const auto& alg = c.algebra();
  const int simple_rank = alg.rank() - alg.torus_rank;
  const int n = alg.rank();
  std::vector<int> denom(n, 4);
  for (int t = 0; t < alg.torus_rank; ++t) {
    int q = 1;
    for (const auto& [w, m] : c.weights()) q = std::max(q, std::abs(w[simple_rank + t]));
    denom[simple_rank + t] = 2 * q;
  }
  std::vector<int> idx(n, 0);
  const Rational half(1, 2);
  while (true) {
    std::vector<Rational> e(n, Rational(0));
    for (int i = 0; i < n; ++i) e[i] = Rational(idx[i], denom[i]);
    bool ok = true;
    for (const auto& [w, m] : c.weights())
      if (pairing(w, e) != half) {
        ok = false;
        break;
      }
    if (ok) return e;
    int i = 0;
    while (i < n && ++idx[i] == denom[i]) idx[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

namespace {

NamedRep isotropy_rep(const CompactGroupSpec& h, Character c, Reality r) {
  NamedRep rep;
  rep.name = "isotropy";
  rep.group = h;
  rep.character = std::move(c);
  rep.reality = r;
  return rep;
}

// Vector representation of SO(n), as a complex character plus reality.
std::pair<Character, Reality> so_vector(int n) {
  ClassicalGroup g{Classical::SO, n};
  auto c = lie::irreducible_character(g.algebra(), catalog::defining_weight(g));
  return {c, n == 2 ? Reality::Complex : Reality::Real};
}

HomogeneousSpace sphere_like(int n, bool projective) {
  HomogeneousSpace x;
  const auto nn = std::to_string(n);
  x.group = catalog::parse_group("SO(" + std::to_string(n + 1) + ")");
  if (projective) {
    x.stabilizer = catalog::parse_group("S(O(1)xO(" + nn + "))");
    x.name = "SO(" + std::to_string(n + 1) + ")/S(O(1)xO(" + nn + "))";
    x.embedding = "block O(1)xO(" + nn + "), determinant one";
  } else {
    x.stabilizer = catalog::parse_group("SO(" + nn + ")");
    x.name = "SO(" + std::to_string(n + 1) + ")/SO(" + nn + ")";
    x.embedding = "block SO(" + nn + ") fixing the first basis vector";
  }
  auto [c, r] = so_vector(n);
  x.isotropy = isotropy_rep(x.stabilizer, c, r);
  return x;
}

}  // namespace

CrossSpace make_cross(CrossKind kind, int n) {
  CrossSpace out;
  out.kind = kind;
  out.n = n;
  HomogeneousSpace& x = out.presentation;
  switch (kind) {
    case CrossKind::Sphere:
    case CrossKind::RealProj:
      if (n < 2) throw Error("sphere and real projective space need n >= 2");
      x = sphere_like(n, kind == CrossKind::RealProj);
      break;
    case CrossKind::ComplexProj: {
      if (n < 1) throw Error("complex projective space needs n >= 1");
      const auto nn = std::to_string(n);
      x.group = catalog::parse_group("SU(" + std::to_string(n + 1) + ")");
      x.stabilizer = catalog::parse_group("S(U(1)xU(" + nn + "))");
      x.name = "SU(" + std::to_string(n + 1) + ")/S(U(1)xU(" + nn + "))";
      x.embedding = "block S(U(1)xU(" + nn + ")), identified with U(" + nn + ")";
      // Tangent space Hom(C, C^n) = det (x) C^n: charge n + 1 on the centre.
      ClassicalGroup u{Classical::U, n};
      Weight hw = catalog::defining_weight(u);
      hw[hw.size() - 1] += n;
      x.isotropy = isotropy_rep(x.stabilizer, lie::irreducible_character(u.algebra(), hw), Reality::Complex);
      // U(n) is (SU(n) x U(1)) / Z_n: a weight descends iff its n-ality
      // matches its charge mod n.
      std::vector<Rational> kernel;
      for (int i = 1; i < n; ++i) kernel.emplace_back(i, n);
      kernel.emplace_back(-1, n);
      x.stabilizer.center_data.push_back({"cover-kernel", kernel, "trivial on representations of U(n)"});
      break;
    }
    case CrossKind::QuatProj: {
      if (n < 1) throw Error("quaternionic projective space needs n >= 1");
      const auto nn = std::to_string(n);
      x.group = catalog::parse_group("Sp(" + std::to_string(n + 1) + ")");
      x.stabilizer = catalog::parse_group("Sp(1)·Sp(" + nn + ")");
      x.name = "Sp(" + std::to_string(n + 1) + ")/Sp(1)·Sp(" + nn + ")";
      x.embedding = "block Sp(1)xSp(" + nn + ") modulo the diagonal -1";
      ClassicalGroup sp1{Classical::Sp, 1}, spn{Classical::Sp, n};
      auto a = lie::irreducible_character(sp1.algebra(), catalog::defining_weight(sp1));
      auto b = lie::irreducible_character(spn.algebra(), catalog::defining_weight(spn));
      x.isotropy = isotropy_rep(x.stabilizer, lie::outer(a, b), Reality::Real);
      break;
    }
    case CrossKind::CayleyPlane: {
      out.n = 2;
      x.group = catalog::parse_group("F4");
      x.stabilizer = catalog::parse_group("Spin(9)");
      x.name = "F4/Spin(9)";
      x.embedding = "Spin(9) as the stabilizer of a Cayley line";
      auto c = lie::irreducible_character(x.stabilizer.algebra, Weight{0, 0, 0, 1});
      x.isotropy = isotropy_rep(x.stabilizer, c, Reality::Real);
      break;
    }
  }
  if (x.isotropy.character.algebra() != x.stabilizer.algebra)
    throw Error(x.name + ": isotropy algebra does not match the stabilizer");
  x.cohomogeneity = 1;
  if (auto e = minus_identity_element(x.isotropy.character)) {
    out.symmetry = catalog::CentralElement{"sigma", *e, "-1 on the tangent space"};
    x.stabilizer.center_data.push_back(*out.symmetry);
    x.isotropy.group = x.stabilizer;
  }
  return out;
}

std::vector<CrossSpace> cross_catalog() {
  std::vector<CrossSpace> out;
  for (int n = 2; n <= 16; ++n) out.push_back(make_cross(CrossKind::Sphere, n));
  for (int n = 2; n <= 16; ++n) out.push_back(make_cross(CrossKind::RealProj, n));
  for (int n = 1; n <= 4; ++n) out.push_back(make_cross(CrossKind::ComplexProj, n));
  for (int n = 1; n <= 4; ++n) out.push_back(make_cross(CrossKind::QuatProj, n));
  out.push_back(make_cross(CrossKind::CayleyPlane, 2));
  return out;
}

HomogeneousSpace times_torus(const HomogeneousSpace& x, int r) {
  if (r < 0) throw Error("negative torus rank");
  HomogeneousSpace y = x;
  const auto t = "T^" + std::to_string(r);
  y.name = t + "x" + x.name;
  y.group = catalog::parse_group(t + "x" + x.group.name);
  y.stabilizer = catalog::parse_group(t + "x" + x.stabilizer.name);
  y.group.center_data = x.group.center_data;
  y.stabilizer.center_data = x.stabilizer.center_data;
  y.stabilizer.connected = x.stabilizer.connected;
  y.isotropy.character = lie::outer(x.isotropy.character, Character::trivial(lie::ReductiveAlgebra::torus(r)));
  if (y.isotropy.character.algebra() != y.stabilizer.algebra)
    throw Error(y.name + ": torus factor does not line up with the stabilizer");
  y.isotropy.group = y.stabilizer;
  return y;
}

HomogeneousSpace flag_su3() {
  HomogeneousSpace x;
  x.name = "SU(3)/T^2";
  x.group = catalog::parse_group("SU(3)");
  x.stabilizer = catalog::parse_group("T^2");
  x.embedding = "diagonal maximal torus";
  // Root spaces e1-e2, e2-e3, e1-e3 in coordinates (t1, t2) with t3 = -t1-t2.
  Character::Map m;
  for (const auto& w : {Weight{1, -1}, Weight{1, 2}, Weight{2, 1}}) m[w] = 1;
  x.isotropy = isotropy_rep(x.stabilizer, Character(x.stabilizer.algebra, m), Reality::Complex);
  return x;
}

}  // namespace cohom::homogeneous
