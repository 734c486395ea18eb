#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "cohom/error.hpp"

namespace cohom::geom {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

class GeometryError : public Error {
 public:
  using Error::Error;
};

/// F(x) = x^T Q x + b^T x + c with Q symmetric.
struct QuadraticConstraint {
  Mat q;
  Vec b;
  double c = 0;

  double value(const Vec& x) const { return x.dot(q * x) + b.dot(x) + c; }
};

/// A submanifold of R^N cut out by quadratic constraints, with the induced
/// metric and a Lie algebra acting through linear skew generators.
struct ModelGeometry {
  std::string name;
  int ambient_dim = 0;
  /// Dimension of M; the constraint Jacobian must have rank ambient_dim - dim.
  int dim = 0;
  std::vector<QuadraticConstraint> constraints;
  std::vector<Mat> generators;
  std::vector<std::string> generator_names;
  /// Orthonormal real basis of the matrix space the coordinates refer to
  /// (empty for plain Euclidean models).
  std::vector<CMat> basis;
  /// Inner product on the matrix space is inner_scale * Re tr(X^* Y).
  double inner_scale = 1;
  std::string notes;

  Vec residual(const Vec& x) const;
  Mat jacobian(const Vec& x) const;
  /// Second derivative of F in directions u, w.
  Vec hessian(const Vec& u, const Vec& w) const;
  /// Orthogonal projector onto T_x M.
  Mat tangent_projector(const Vec& x) const;
  /// Second fundamental form of M in R^N.
  Vec ambient_sff(const Vec& x, const Vec& u, const Vec& w) const;
  /// Gauss-Newton projection back onto M.
  Vec project(const Vec& x, double tol = 1e-13) const;
  /// Exponential of a generator combination.
  Mat group_element(const Vec& coeffs) const;
  Mat generator(const Vec& coeffs) const;

  /// Matrix coordinates of a point in `basis`.
  Vec coords(const CMat& m) const;
  CMat matrix(const Vec& x) const;
};

/// Round S^4: unit traceless symmetric 3x3 matrices under SO(3) conjugation.
ModelGeometry s4_symmetric();
/// Round S^n in R^{n+1} with the rotations of the first `k` coordinates.
ModelGeometry round_sphere(int n, int k);
/// CP^2 as rank-one Hermitian projectors in 3x3 Hermitian matrices
/// (metric tr(XY)); `group` is "SO(3)" or "SU(3)", acting by conjugation.
ModelGeometry cp2_projectors(const std::string& group);
/// Unit sphere S^7 of su(3) with <X, Y> = -tr(XY)/2 under the adjoint action.
ModelGeometry s7_su3();
/// Flat torus S^1 x S^1 in R^4 with the two rotations.
ModelGeometry flat_torus();

/// Looks up a builtin by name with JSON parameters; throws GeometryError.
ModelGeometry builtin_model(const std::string& builtin, const nlohmann::json& params);

struct OrbitPoint {
  const ModelGeometry* model = nullptr;
  Vec point;
  /// Columns span the orbit tangent space (generator values at point).
  Mat orbit_tangent;
  int orbit_dim = 0;
};

/// Rank of the generator span decides orbit_dim (relative threshold 1e-8).
/// Throws GeometryError when the point is off M or a generator is not
/// tangent.
OrbitPoint make_orbit_point(const ModelGeometry& m, const Vec& x);

struct SffResult {
  double norm = 0;
  /// Same computation with the step halved.
  double norm_half_step = 0;
  double step = 0;
  int orbit_dim = 0;
};

/// Norm of the second fundamental form of the orbit inside M, from
/// Richardson-extrapolated central differences of orbit frames along the
/// orbit. `declared_dim` < 0 accepts the computed rank.
SffResult second_fundamental_form_norm(const OrbitPoint& p, double step = 1e-4, int declared_dim = -1);

struct TgResult {
  bool totally_geodesic = false;
  double max_norm = 0;
  std::vector<double> norms;
};

/// Tests p and `extra` further points of its orbit (fixed seed).
TgResult totally_geodesic_test(const OrbitPoint& p, double tol, int extra = 4, unsigned seed = 1);

struct GeodesicSample {
  double t = 0;
  Vec x;
  Vec v;
};

struct GeodesicProfile {
  const ModelGeometry* model = nullptr;
  std::vector<GeodesicSample> samples;
  double dt = 0;
  /// Largest |F| seen after projection.
  double max_drift = 0;
  /// Largest tangential part of the five-point second difference.
  double max_residual = 0;
};

/// Geodesic from x in direction v (projected to T_x M and normalised) on
/// [0, t_max], RK4 with projection after each step.
GeodesicProfile integrate_geodesic(const ModelGeometry& m, const Vec& x, const Vec& v, double t_max, double dt = 1e-3);
/// Same, requiring v orthogonal to the orbit at x; throws otherwise.
GeodesicProfile normal_geodesic(const OrbitPoint& p, const Vec& v, double t_max, double dt = 1e-3);

struct KillingSample {
  double t = 0;
  double f = 0;
  double f2 = 0;
  std::optional<double> f_dd;
  std::optional<double> f2_dd;
  double curvature = 0;
  double d_norm2 = 0;
  std::optional<double> identity_residual;
  bool reliable = true;
};

struct KillingProfile {
  std::string generator;
  std::vector<KillingSample> samples;
  double max_identity_residual = 0;
  /// Largest f'' over reliable samples with f above the threshold.
  double max_f_dd_above(double f_min) const;
  double max_abs_f_dd() const;
};

/// f(t) = |X|_{gamma(t)} for one generator, its second derivatives by
/// five-point differences, and the curvature identity residual with R from
/// the Gauss equation and D X by tangential projection.
KillingProfile killing_norm_profile(const GeodesicProfile& g, int generator_index, double tol = 1e-6);

std::string profile_csv(const KillingProfile& k);

struct ShapeReport {
  bool ok = false;
  double off_block_max = 0;
  std::vector<double> scalar_deviation;
  std::vector<std::vector<double>> block_eigenvalues;
  std::string detail;
};

/// Shape operator of a hypersurface orbit at p with respect to the unit
/// normal `normal`, in blocks given as generator-coefficient frames. Throws
/// GeometryError when blocks are not mutually orthogonal or do not span
/// the orbit tangent space.
ShapeReport shape_operator_block_check(const OrbitPoint& p, const Vec& normal,
                                       const std::vector<std::vector<Vec>>& module_basis, double tol = 1e-6);

}  // namespace cohom::geom

namespace cohom::geom {

/// Tolerances of the verification suite, overridable by name.
struct Tolerances {
  double sff = 1e-6;
  double identity = 1e-4;
  double geodesic = 1e-8;
  double flat = 1e-6;
  /// Relative change allowed when the difference step is halved.
  double step_halving = 5e-4;

  /// Sets one field by name ("sff", "identity", ...); values outside
  /// [1e-12, 1e-2] throw GeometryError.
  void set(const std::string& name, double value);
};

/// Path of the shipped model suite (next to the catalog).
std::string default_models_path();
nlohmann::json load_models(const std::string& path);

struct SuiteResult {
  nlohmann::json report;
  bool pass = true;
  std::vector<std::string> failures;
  /// Killing profiles as CSV by "<check id>/<generator>".
  std::map<std::string, std::string> csv;
};

/// Runs the checks of a model suite; `ids` empty means all. Unknown ids
/// throw GeometryError.
SuiteResult run_geometry_suite(const nlohmann::json& suite, const std::vector<std::string>& ids = {},
                               const Tolerances& tol = {});

}  // namespace cohom::geom
