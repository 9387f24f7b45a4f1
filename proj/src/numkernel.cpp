#include "matevo/numkernel.hpp"

#include <algorithm>
#include <cmath>

namespace matevo::num {

NullspaceBasis nullspace(const Eigen::MatrixXd& m, double rel_tol) {
  if (rel_tol <= 0.0) throw ConfigError("nullspace rel_tol must be > 0");
  if (!m.allFinite())
    throw NumericError("constraint matrix has non-finite entries");

  const int q = static_cast<int>(m.cols());
  NullspaceBasis out;

  if (m.rows() == 0 || m.isZero(0.0)) {
    out.basis = Eigen::MatrixXd::Identity(q, q);
    out.dim = q;
    out.singular_values = Eigen::VectorXd::Zero(std::min<int>(
        std::max<int>(static_cast<int>(m.rows()), 0), q));
    out.threshold = 0.0;
    return out;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double sigma_max = sv(0);
  out.singular_values = sv;

  if (sigma_max == 0.0) {
    out.basis = Eigen::MatrixXd::Identity(q, q);
    out.dim = q;
    out.threshold = 0.0;
    return out;
  }

  const double cutoff = rel_tol * sigma_max;
  out.threshold = cutoff;
  int kernel = q - static_cast<int>(sv.size());  // columns beyond min(p, q)
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cutoff) ++kernel;
  out.dim = kernel;
  out.basis = svd.matrixV().rightCols(kernel);
  return out;
}

NullspaceBasis nullspace(const ConstraintMatrix& m, double rel_tol) {
  return nullspace(m.entries, rel_tol);
}

Eigen::MatrixXd procrustes_rotation(const Eigen::MatrixXd& prev,
                                    const Eigen::MatrixXd& cur) {
  if (prev.rows() != cur.rows() || prev.cols() != cur.cols())
    throw DimensionMismatchError("procrustes_rotation: shape mismatch");
  if (cur.cols() == 0) return Eigen::MatrixXd(0, 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      cur.transpose() * prev, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

Eigen::MatrixXd procrustes_align(const Eigen::MatrixXd& prev,
                                 const Eigen::MatrixXd& cur) {
  if (cur.cols() == 0) return cur;
  return cur * procrustes_rotation(prev, cur);
}

NullspaceBasis align_basis(const NullspaceBasis& prev,
                           const NullspaceBasis& cur) {
  if (prev.dim != cur.dim)
    throw DimensionMismatchError(
        "align_basis: dimension jump (" + std::to_string(prev.dim) + " -> " +
        std::to_string(cur.dim) + ")");
  NullspaceBasis out = cur;
  out.basis = procrustes_align(prev.basis, cur.basis);
  return out;
}

std::vector<Eigen::MatrixXd> fd_derivative(
    const std::vector<Eigen::MatrixXd>& field, double h) {
  const int n = static_cast<int>(field.size());
  if (n < 3)
    throw ConfigError("fd_derivative needs at least 3 nodes, got " +
                      std::to_string(n));
  if (h <= 0.0) throw ConfigError("fd_derivative step must be > 0");

  std::vector<Eigen::MatrixXd> out(field.size());
  const double inv2h = 1.0 / (2.0 * h);
  out[0] = (-3.0 * field[0] + 4.0 * field[1] - field[2]) * inv2h;
  for (int i = 1; i + 1 < n; ++i) out[i] = (field[i + 1] - field[i - 1]) * inv2h;
  out[n - 1] = (3.0 * field[n - 1] - 4.0 * field[n - 2] + field[n - 3]) * inv2h;
  return out;
}

int block_rank(const Eigen::MatrixXd& block, double rel_tol) {
  if (block.rows() == 0 || block.cols() == 0 || block.isZero(0.0)) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(block);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(1.0, sv(0));
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

double projection_residual(const Eigen::MatrixXd& basis,
                           const Eigen::VectorXd& v) {
  if (basis.cols() == 0) return v.norm();
  return (v - basis * (basis.transpose() * v)).norm();
}

Eigen::VectorXd principal_angles(const Eigen::MatrixXd& a,
                                 const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols())
    throw DimensionMismatchError("principal_angles: subspace dims differ");
  const int d = static_cast<int>(a.cols());
  if (d == 0) return Eigen::VectorXd(0);

  // combined cosine/sine estimate: acos loses half the digits near zero,
  // so small angles come from the projected complement instead
  Eigen::JacobiSVD<Eigen::MatrixXd> cos_svd(a.transpose() * b);
  Eigen::JacobiSVD<Eigen::MatrixXd> sin_svd(b - a * (a.transpose() * b));

  Eigen::VectorXd cos_angles(d), sin_angles(d);
  for (int i = 0; i < d; ++i) {
    cos_angles(i) =
        std::acos(std::clamp(cos_svd.singularValues()(i), -1.0, 1.0));
    sin_angles(i) =
        std::asin(std::clamp(sin_svd.singularValues()(i), -1.0, 1.0));
  }
  std::sort(cos_angles.data(), cos_angles.data() + d);
  std::sort(sin_angles.data(), sin_angles.data() + d);

  Eigen::VectorXd angles(d);
  for (int i = 0; i < d; ++i)
    angles(i) = cos_angles(i) < M_PI_4 ? sin_angles(i) : cos_angles(i);
  return angles;
}

Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.cols() == 0 || m.isZero(0.0))
    return Eigen::MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = rel_tol * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace matevo::num
