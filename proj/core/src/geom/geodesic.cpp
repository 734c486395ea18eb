#include <cmath>
#include <sstream>

#include "cohom/geom/geom.hpp"

namespace cohom::geom {

namespace {

// Five-point second difference at interior index i.
template <class Get>
auto second_difference(Get get, std::size_t i, double dt) {
  return (-get(i - 2) + 16 * get(i - 1) - 30 * get(i) + 16 * get(i + 1) - get(i + 2)) / (12 * dt * dt);
}

}  // namespace

GeodesicProfile integrate_geodesic(const ModelGeometry& m, const Vec& x0, const Vec& v0, double t_max, double dt) {
  if (dt <= 0 || t_max <= 0) throw GeometryError("geodesic needs positive t_max and dt");
  GeodesicProfile g;
  g.model = &m;
  g.dt = dt;
  Vec x = m.project(x0);
  Vec v = m.tangent_projector(x) * v0;
  if (v.norm() < 1e-12) throw GeometryError(m.name + ": geodesic direction is not tangent to M");
  v.normalize();
  auto acc = [&](const Vec& p, const Vec& w) { return m.ambient_sff(p, w, w); };
  const auto steps = static_cast<std::size_t>(std::llround(t_max / dt));
  g.samples.push_back({0, x, v});
  for (std::size_t s = 1; s <= steps; ++s) {
    const Vec k1x = v, k1v = acc(x, v);
    const Vec k2x = v + dt / 2 * k1v, k2v = acc(x + dt / 2 * k1x, k2x);
    const Vec k3x = v + dt / 2 * k2v, k3v = acc(x + dt / 2 * k2x, k3x);
    const Vec k4x = v + dt * k3v, k4v = acc(x + dt * k3x, k4x);
    x += dt / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
    v += dt / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    x = m.project(x);
    v = (m.tangent_projector(x) * v).normalized();
    g.max_drift = std::max(g.max_drift, m.residual(x).lpNorm<Eigen::Infinity>());
    g.samples.push_back({static_cast<double>(s) * dt, x, v});
  }
  for (std::size_t i = 2; i + 2 < g.samples.size(); ++i) {
    const Vec a = second_difference([&](std::size_t j) -> const Vec& { return g.samples[j].x; }, i, dt);
    g.max_residual = std::max(g.max_residual, (m.tangent_projector(g.samples[i].x) * a).norm());
  }
  return g;
}

GeodesicProfile normal_geodesic(const OrbitPoint& p, const Vec& v, double t_max, double dt) {
  const Vec w = p.model->tangent_projector(p.point) * v;
  if (w.norm() < 1e-12) throw GeometryError("direction is not tangent to M");
  const double along = (p.orbit_tangent.transpose() * w.normalized()).lpNorm<Eigen::Infinity>();
  if (along > 1e-9) throw GeometryError("direction is not orthogonal to the orbit");
  return integrate_geodesic(*p.model, p.point, w, t_max, dt);
}

KillingProfile killing_norm_profile(const GeodesicProfile& g, int generator_index, double tol) {
  const auto& m = *g.model;
  if (generator_index < 0 || generator_index >= static_cast<int>(m.generators.size()))
    throw GeometryError(m.name + ": no generator " + std::to_string(generator_index));
  const Mat& A = m.generators[static_cast<std::size_t>(generator_index)];
  KillingProfile k;
  k.generator = m.generator_names[static_cast<std::size_t>(generator_index)];
  for (const auto& s : g.samples) {
    KillingSample ks;
    ks.t = s.t;
    const Vec X = A * s.x;
    ks.f = X.norm();
    ks.f2 = X.squaredNorm();
    ks.reliable = ks.f >= 10 * tol;
    ks.curvature = m.ambient_sff(s.x, X, X).dot(m.ambient_sff(s.x, s.v, s.v)) - m.ambient_sff(s.x, X, s.v).squaredNorm();
    ks.d_norm2 = (m.tangent_projector(s.x) * (A * s.v)).squaredNorm();
    k.samples.push_back(ks);
  }
  for (std::size_t i = 2; i + 2 < k.samples.size(); ++i) {
    auto& s = k.samples[i];
    s.f_dd = second_difference([&](std::size_t j) { return k.samples[j].f; }, i, g.dt);
    s.f2_dd = second_difference([&](std::size_t j) { return k.samples[j].f2; }, i, g.dt);
    s.identity_residual = std::abs(2 * s.curvature - (2 * s.d_norm2 - *s.f2_dd));
    k.max_identity_residual = std::max(k.max_identity_residual, *s.identity_residual);
  }
  return k;
}

double KillingProfile::max_f_dd_above(double f_min) const {
  double mx = -INFINITY;
  for (const auto& s : samples)
    if (s.f_dd && s.reliable && s.f > f_min) mx = std::max(mx, *s.f_dd);
  return mx;
}

double KillingProfile::max_abs_f_dd() const {
  double mx = 0;
  for (const auto& s : samples)
    if (s.f_dd) mx = std::max(mx, std::abs(*s.f_dd));
  return mx;
}

std::string profile_csv(const KillingProfile& k) {
  std::ostringstream os;
  os.precision(12);
  os << "t,f,f_dd,f2_dd,curvature,d_norm2,identity_residual,reliable\n";
  for (const auto& s : k.samples) {
    os << s.t << ',' << s.f << ',';
    if (s.f_dd) os << *s.f_dd;
    os << ',';
    if (s.f2_dd) os << *s.f2_dd;
    os << ',' << s.curvature << ',' << s.d_norm2 << ',';
    if (s.identity_residual) os << *s.identity_residual;
    os << ',' << (s.reliable ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace cohom::geom
