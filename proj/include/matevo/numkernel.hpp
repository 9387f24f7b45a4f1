#pragma once

#include <Eigen/Dense>
#include <vector>

#include "matevo/errors.hpp"

namespace matevo::num {

/// Provenance of one constraint row: which sample, response component and
/// frame basis element produced it (-1 where not applicable).
struct RowTag {
  int sample = -1;
  int component = -1;
  int basis = -1;
};

/// Sampled linear system whose kernel is a distribution fibre.
struct ConstraintMatrix {
  Eigen::MatrixXd entries;
  std::vector<RowTag> tags;

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

/// Orthonormal kernel basis of a constraint matrix together with the
/// singular-value diagnostics that produced it.
struct NullspaceBasis {
  Eigen::MatrixXd basis;  // q x dim, orthonormal columns
  int dim = 0;
  Eigen::VectorXd singular_values;  // descending, min(p, q) values
  double threshold = 0.0;           // absolute cutoff actually applied
};

/// Kernel of M at a relative threshold: singular directions with
/// sigma <= rel_tol * sigma_max. A zero (or empty) matrix has a full kernel.
/// Throws NumericError on non-finite entries.
NullspaceBasis nullspace(const Eigen::MatrixXd& m, double rel_tol);

NullspaceBasis nullspace(const ConstraintMatrix& m, double rel_tol);

/// Orthogonal Q minimizing |cur*Q - prev|_F.
Eigen::MatrixXd procrustes_rotation(const Eigen::MatrixXd& prev,
                                    const Eigen::MatrixXd& cur);

/// Orthogonal Procrustes: the rotation Q minimizing |cur*Q - prev|_F over
/// orthogonal Q; returns cur*Q. Spans are unchanged.
Eigen::MatrixXd procrustes_align(const Eigen::MatrixXd& prev,
                                 const Eigen::MatrixXd& cur);

/// Basis-level wrapper. Throws DimensionMismatchError when dims differ,
/// which callers treat as a symmetry-dimension jump.
NullspaceBasis align_basis(const NullspaceBasis& prev,
                           const NullspaceBasis& cur);

/// Derivative of a matrix-valued field on a uniform grid with step h:
/// central differences in the interior, second-order one-sided at the
/// endpoints. Requires at least 3 nodes and a pre-aligned field.
std::vector<Eigen::MatrixXd> fd_derivative(
    const std::vector<Eigen::MatrixXd>& field, double h);

/// Rank of a block taken from an orthonormal basis. Entries are components
/// of unit vectors, so the relative cutoff is anchored at scale one:
/// sigma > rel_tol * max(1, sigma_max).
int block_rank(const Eigen::MatrixXd& block, double rel_tol);

/// |v - B B' v|: distance from v to the span of the orthonormal basis B.
double projection_residual(const Eigen::MatrixXd& basis,
                           const Eigen::VectorXd& v);

/// Principal angles (radians, ascending) between the spans of two
/// orthonormal bases of equal dimension.
Eigen::VectorXd principal_angles(const Eigen::MatrixXd& a,
                                 const Eigen::MatrixXd& b);

/// Orthonormal basis for the column span of m (rank decided at rel_tol).
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& m,
                                 double rel_tol = 1e-12);

}  // namespace matevo::num
