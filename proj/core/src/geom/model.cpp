#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>
#include <nlohmann/json.hpp>

#include "cohom/geom/geom.hpp"

namespace cohom::geom {

namespace {

using C = std::complex<double>;

// Pseudo-inverse keeping the `rank` largest singular values. Redundant
// constraints pick up small spurious singular values off M, so the rank is
// the codimension rather than a threshold.
Mat pinv(const Mat& a, int rank) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Vec inv = Vec::Zero(s.size());
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(rank, s.size()); ++i)
    if (s(i) > 1e-12 * s(0)) inv(i) = 1 / s(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

double ip(const ModelGeometry& m, const CMat& a, const CMat& b) { return m.inner_scale * (a.adjoint() * b).trace().real(); }

CMat unit(int n, int i, int j, C v = 1) {
  CMat e = CMat::Zero(n, n);
  e(i, j) = v;
  return e;
}

// Orthonormal real basis of a real matrix subspace spanned by `gens`.
std::vector<CMat> orthonormalize(const ModelGeometry& m, std::vector<CMat> gens) {
  std::vector<CMat> out;
  for (auto g : gens) {
    for (const auto& b : out) g -= ip(m, b, g) * b;
    const double n = std::sqrt(ip(m, g, g));
    if (n > 1e-12) out.push_back(g / n);
  }
  return out;
}

// Generator matrix of X -> Z X - X Z in the model basis.
Mat conjugation(const ModelGeometry& m, const CMat& z) {
  const auto n = static_cast<Eigen::Index>(m.basis.size());
  Mat g(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    const CMat img = z * m.basis[l] - m.basis[l] * z;
    for (Eigen::Index k = 0; k < n; ++k) g(k, l) = ip(m, m.basis[k], img);
  }
  return g;
}

QuadraticConstraint unit_sphere(int n) { return {Mat::Identity(n, n), Vec::Zero(n), -1}; }

std::vector<CMat> so_generators(int n) {
  std::vector<CMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(unit(n, i, j) - unit(n, j, i));
  return out;
}

std::vector<CMat> su_generators(int n) {
  std::vector<CMat> out = so_generators(n);
  const C I(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(unit(n, i, j, I) + unit(n, j, i, I));
  for (int i = 0; i + 1 < n; ++i) out.push_back(unit(n, i, i, I) - unit(n, i + 1, i + 1, I));
  return out;
}

std::string gname(const char* p, int i, int j) { return std::string(p) + std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

Vec ModelGeometry::residual(const Vec& x) const {
  Vec r(static_cast<Eigen::Index>(constraints.size()));
  for (std::size_t k = 0; k < constraints.size(); ++k) r(static_cast<Eigen::Index>(k)) = constraints[k].value(x);
  return r;
}

Mat ModelGeometry::jacobian(const Vec& x) const {
  Mat j(static_cast<Eigen::Index>(constraints.size()), ambient_dim);
  for (std::size_t k = 0; k < constraints.size(); ++k)
    j.row(static_cast<Eigen::Index>(k)) = (2 * constraints[k].q * x + constraints[k].b).transpose();
  return j;
}

Vec ModelGeometry::hessian(const Vec& u, const Vec& w) const {
  Vec h(static_cast<Eigen::Index>(constraints.size()));
  for (std::size_t k = 0; k < constraints.size(); ++k) h(static_cast<Eigen::Index>(k)) = 2 * u.dot(constraints[k].q * w);
  return h;
}

Mat ModelGeometry::tangent_projector(const Vec& x) const {
  const Mat j = jacobian(x);
  return Mat::Identity(ambient_dim, ambient_dim) - pinv(j, ambient_dim - dim) * j;
}

Vec ModelGeometry::ambient_sff(const Vec& x, const Vec& u, const Vec& w) const {
  return -pinv(jacobian(x), ambient_dim - dim) * hessian(u, w);
}

Vec ModelGeometry::project(const Vec& x0, double tol) const {
  Vec x = x0;
  for (int it = 0; it < 50; ++it) {
    const Vec r = residual(x);
    x -= pinv(jacobian(x), ambient_dim - dim) * r;
    // One step past the tolerance keeps successive geodesic samples smooth.
    if (r.lpNorm<Eigen::Infinity>() < tol) return x;
  }
  if (residual(x).lpNorm<Eigen::Infinity>() > 1e3 * tol) throw GeometryError(name + ": projection onto M did not converge");
  return x;
}

Mat ModelGeometry::generator(const Vec& coeffs) const {
  Mat a = Mat::Zero(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) a += coeffs(static_cast<Eigen::Index>(i)) * generators[i];
  return a;
}

Mat ModelGeometry::group_element(const Vec& coeffs) const { return generator(coeffs).exp(); }

Vec ModelGeometry::coords(const CMat& m) const {
  Vec x(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) x(static_cast<Eigen::Index>(k)) = ip(*this, basis[k], m);
  return x;
}

CMat ModelGeometry::matrix(const Vec& x) const {
  CMat m = CMat::Zero(basis.at(0).rows(), basis.at(0).cols());
  for (std::size_t k = 0; k < basis.size(); ++k) m += x(static_cast<Eigen::Index>(k)) * basis[k];
  return m;
}

ModelGeometry s4_symmetric() {
  ModelGeometry m;
  m.name = "s4-symmetric";
  m.basis = orthonormalize(m, {unit(3, 0, 0) - unit(3, 1, 1), unit(3, 1, 1) - unit(3, 2, 2), unit(3, 0, 1) + unit(3, 1, 0),
                               unit(3, 0, 2) + unit(3, 2, 0), unit(3, 1, 2) + unit(3, 2, 1)});
  m.ambient_dim = 5;
  m.dim = 4;
  m.constraints = {unit_sphere(5)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      m.generators.push_back(conjugation(m, unit(3, i, j) - unit(3, j, i)));
      m.generator_names.push_back(gname("rot", i, j));
    }
  m.notes = "unit traceless symmetric 3x3 matrices, metric tr(XY), SO(3) by conjugation";
  return m;
}

ModelGeometry round_sphere(int n, int k) {
  if (n < 1 || k < 2 || k > n + 1) throw GeometryError("round-sphere needs n >= 1 and 2 <= k <= n + 1");
  ModelGeometry m;
  m.name = "round-sphere";
  m.ambient_dim = n + 1;
  m.dim = n;
  m.constraints = {unit_sphere(n + 1)};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Mat g = Mat::Zero(n + 1, n + 1);
      g(i, j) = 1;
      g(j, i) = -1;
      m.generators.push_back(g);
      m.generator_names.push_back(gname("rot", i, j));
    }
  m.notes = "unit sphere in R^" + std::to_string(n + 1) + ", SO(" + std::to_string(k) + ") on the first coordinates";
  return m;
}

ModelGeometry cp2_projectors(const std::string& group) {
  if (group != "SO(3)" && group != "SU(3)") throw GeometryError("cp2-projectors: group must be SO(3) or SU(3)");
  ModelGeometry m;
  m.name = "cp2-projectors";
  std::vector<CMat> herm;
  for (int i = 0; i < 3; ++i) herm.push_back(unit(3, i, i));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      herm.push_back(unit(3, i, j) + unit(3, j, i));
      herm.push_back(unit(3, i, j, C(0, 1)) - unit(3, j, i, C(0, 1)));
    }
  m.basis = orthonormalize(m, herm);
  const int n = static_cast<int>(m.basis.size());
  m.ambient_dim = n;
  m.dim = 4;
  // P^2 = P coordinate by coordinate, and tr P = 1.
  for (int k = 0; k < n; ++k) {
    QuadraticConstraint c{Mat::Zero(n, n), Vec::Zero(n), 0};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c.q(i, j) = 0.5 * (ip(m, m.basis[k], m.basis[i] * m.basis[j]) + ip(m, m.basis[k], m.basis[j] * m.basis[i]));
    c.b(k) = -1;
    m.constraints.push_back(c);
  }
  QuadraticConstraint tr{Mat::Zero(n, n), Vec::Zero(n), -1};
  for (int i = 0; i < n; ++i) tr.b(i) = m.basis[i].trace().real();
  m.constraints.push_back(tr);
  const auto gens = group == "SO(3)" ? so_generators(3) : su_generators(3);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    m.generators.push_back(conjugation(m, gens[i]));
    m.generator_names.push_back(group + "[" + std::to_string(i) + "]");
  }
  m.notes = "rank-one Hermitian projectors, metric tr(XY), " + group + " by conjugation";
  return m;
}

ModelGeometry s7_su3() {
  ModelGeometry m;
  m.name = "s7-su3";
  m.inner_scale = 0.5;
  m.basis = orthonormalize(m, su_generators(3));
  m.ambient_dim = 8;
  m.dim = 7;
  m.constraints = {unit_sphere(8)};
  const auto gens = su_generators(3);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    m.generators.push_back(conjugation(m, gens[i]));
    m.generator_names.push_back("ad[" + std::to_string(i) + "]");
  }
  m.notes = "unit sphere of su(3) with <X, Y> = -tr(XY)/2, adjoint action";
  return m;
}

ModelGeometry flat_torus() {
  ModelGeometry m;
  m.name = "flat-torus";
  m.ambient_dim = 4;
  m.dim = 2;
  for (int f = 0; f < 2; ++f) {
    QuadraticConstraint c{Mat::Zero(4, 4), Vec::Zero(4), -1};
    c.q(2 * f, 2 * f) = c.q(2 * f + 1, 2 * f + 1) = 1;
    m.constraints.push_back(c);
    Mat g = Mat::Zero(4, 4);
    g(2 * f, 2 * f + 1) = 1;
    g(2 * f + 1, 2 * f) = -1;
    m.generators.push_back(g);
    m.generator_names.push_back("rot" + std::to_string(f + 1));
  }
  m.notes = "product of unit circles in R^4";
  return m;
}

ModelGeometry builtin_model(const std::string& builtin, const nlohmann::json& params) {
  if (builtin == "s4-symmetric") return s4_symmetric();
  if (builtin == "round-sphere") return round_sphere(params.value("n", 4), params.value("k", 4));
  if (builtin == "cp2-projectors") return cp2_projectors(params.value("group", std::string("SO(3)")));
  if (builtin == "s7-su3") return s7_su3();
  if (builtin == "flat-torus") return flat_torus();
  throw GeometryError("unknown builtin model '" + builtin + "'");
}

}  // namespace cohom::geom
