#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "cohom/geom/geom.hpp"

namespace cohom::geom {

namespace {

constexpr double kRankTol = 1e-8;

struct Frame {
  /// Orthonormal orbit tangent vectors as columns.
  Mat e;
  /// Generator coefficients of each column.
  Mat coeffs;
};

Frame orthonormal_frame(const OrbitPoint& p) {
  Eigen::JacobiSVD<Mat> svd(p.orbit_tangent, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cut = kRankTol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  Frame f;
  f.e = svd.matrixU().leftCols(r);
  f.coeffs = svd.matrixV().leftCols(r) * s.head(r).cwiseInverse().asDiagonal();
  return f;
}

}  // namespace

OrbitPoint make_orbit_point(const ModelGeometry& m, const Vec& x) {
  if (x.size() != m.ambient_dim) throw GeometryError(m.name + ": point has the wrong dimension");
  if (m.residual(x).lpNorm<Eigen::Infinity>() > 1e-9) throw GeometryError(m.name + ": point is not on M");
  const Mat pt = m.tangent_projector(x);
  OrbitPoint p;
  p.model = &m;
  p.point = x;
  p.orbit_tangent.resize(m.ambient_dim, static_cast<Eigen::Index>(m.generators.size()));
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    const Vec v = m.generators[i] * x;
    if ((v - pt * v).norm() > 1e-9 * std::max(1.0, v.norm()))
      throw GeometryError(m.name + ": generator " + m.generator_names[i] + " is not tangent to M");
    p.orbit_tangent.col(static_cast<Eigen::Index>(i)) = v;
  }
  p.orbit_dim = static_cast<int>(orthonormal_frame(p).e.cols());
  return p;
}

SffResult second_fundamental_form_norm(const OrbitPoint& p, double step, int declared_dim) {
  const auto& m = *p.model;
  const Frame f = orthonormal_frame(p);
  const int k = static_cast<int>(f.e.cols());
  if (declared_dim >= 0 && k != declared_dim)
    throw GeometryError(m.name + ": orbit frame has rank " + std::to_string(k) + ", expected " +
                        std::to_string(declared_dim));
  SffResult r;
  r.orbit_dim = k;
  r.step = step;
  if (k == 0) return r;
  const Mat normal = m.tangent_projector(p.point) - f.e * f.e.transpose();
  const double scale = std::max(1.0, p.point.norm());

  // D_{E_a} E_b along the orbit curve exp(t A_a) x, central differences.
  auto derivative = [&](int a, int b, double h) {
    const Mat A = m.generator(f.coeffs.col(a)), B = m.generator(f.coeffs.col(b));
    const Vec plus = (h * A).exp() * p.point, minus = (-h * A).exp() * p.point;
    if (m.residual(plus).lpNorm<Eigen::Infinity>() > 1e-10 || m.residual(minus).lpNorm<Eigen::Infinity>() > 1e-10)
      throw GeometryError(m.name + ": orbit curve leaves M during differencing");
    return Vec((B * plus - B * minus) / (2 * h));
  };
  auto norm_at = [&](double h) {
    double s = 0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const Vec rich = (4 * derivative(a, b, h / 2) - derivative(a, b, h)) / 3;
        s += (normal * rich).squaredNorm();
      }
    return std::sqrt(s);
  };
  r.norm = norm_at(step * scale);
  r.norm_half_step = norm_at(step * scale / 2);
  return r;
}

TgResult totally_geodesic_test(const OrbitPoint& p, double tol, int extra, unsigned seed) {
  const auto& m = *p.model;
  TgResult r;
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  r.norms.push_back(second_fundamental_form_norm(p, 1e-4, p.orbit_dim).norm);
  for (int i = 0; i < extra; ++i) {
    Vec c(static_cast<Eigen::Index>(m.generators.size()));
    for (auto& x : c) x = nd(rng);
    const Vec q = m.project(m.group_element(c) * p.point);
    r.norms.push_back(second_fundamental_form_norm(make_orbit_point(m, q), 1e-4, p.orbit_dim).norm);
  }
  r.max_norm = *std::max_element(r.norms.begin(), r.norms.end());
  r.totally_geodesic = r.max_norm < tol;
  return r;
}

}  // namespace cohom::geom
