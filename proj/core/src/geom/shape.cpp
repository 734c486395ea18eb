#include <cmath>

#include "cohom/geom/geom.hpp"

namespace cohom::geom {

ShapeReport shape_operator_block_check(const OrbitPoint& p, const Vec& normal,
                                       const std::vector<std::vector<Vec>>& module_basis, double tol) {
  const auto& m = *p.model;
  const Vec n = normal.normalized();
  if ((m.tangent_projector(p.point) * n - n).norm() > 1e-9 || (p.orbit_tangent.transpose() * n).norm() > 1e-9)
    throw GeometryError(m.name + ": normal is not a unit normal to the orbit inside M");

  // Orthonormalise within each block, tracking generator coefficients.
  std::vector<std::vector<std::pair<Vec, Vec>>> blocks;
  int total = 0;
  for (const auto& frame : module_basis) {
    std::vector<std::pair<Vec, Vec>> blk;
    for (const auto& c : frame) {
      Vec e = m.generator(c) * p.point;
      Vec cc = c;
      for (const auto& [f, fc] : blk) {
        const double d = f.dot(e);
        e -= d * f;
        cc -= d * fc;
      }
      const double len = e.norm();
      if (len < 1e-10) throw GeometryError(m.name + ": module frame is linearly dependent");
      blk.emplace_back(e / len, cc / len);
    }
    total += static_cast<int>(blk.size());
    blocks.push_back(std::move(blk));
  }
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      for (const auto& [e, c] : blocks[a])
        for (const auto& [f, d] : blocks[b])
          if (std::abs(e.dot(f)) > 1e-8) throw GeometryError(m.name + ": module blocks are not orthogonal");
  if (total != p.orbit_dim) throw GeometryError(m.name + ": module blocks do not span the orbit tangent space");

  // <S e, f> = -<D_e N, f> with N extended equivariantly along the orbit.
  auto shape = [&](const std::pair<Vec, Vec>& e, const Vec& f) { return -(m.generator(e.second) * n).dot(f); };
  ShapeReport r;
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      for (const auto& e : blocks[a])
        for (const auto& [f, d] : blocks[b]) r.off_block_max = std::max(r.off_block_max, std::abs(shape(e, f)));
    }
  bool scalar = true;
  for (const auto& blk : blocks) {
    const auto d = static_cast<Eigen::Index>(blk.size());
    Mat s(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) s(i, j) = shape(blk[static_cast<std::size_t>(i)], blk[static_cast<std::size_t>(j)].first);
    const Mat sym = (s + s.transpose()) / 2;
    const double mean = sym.trace() / static_cast<double>(d);
    const double dev = (sym - mean * Mat::Identity(d, d)).norm();
    r.scalar_deviation.push_back(dev);
    scalar &= dev < tol;
    Eigen::SelfAdjointEigenSolver<Mat> es(sym);
    r.block_eigenvalues.emplace_back(es.eigenvalues().data(), es.eigenvalues().data() + d);
  }
  r.ok = r.off_block_max < tol && scalar;
  r.detail = r.ok ? "block-diagonal with scalar blocks" : "shape operator mixes blocks or is not scalar on a block";
  return r;
}

}  // namespace cohom::geom
