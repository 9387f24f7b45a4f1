#pragma once

#include <Eigen/Dense>
#include <vector>

#include "matevo/dsl.hpp"
#include "matevo/numkernel.hpp"

namespace matevo::symmetry {

// ---------------------------------------------------------------------------
// Infinitesimal material symmetries at a point (t, x): the 3x3 matrices L
// whose induced deformation direction F*L is annihilated by dW/dF at every
// sampled F. Unknowns are flattened row-major, L(l, j) -> column 3l + j.
// ---------------------------------------------------------------------------

struct SymmetryAlgebra {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  num::NullspaceBasis basis;  // 9 x dim
  int dim = 0;
};

/// One constraint row per (sample, component): the row over unknowns
/// L(l, j) is flatten(F' * dW_c/dF).
num::ConstraintMatrix symmetry_constraints(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples);

SymmetryAlgebra symmetry_algebra(const dsl::ResponseModel& model, double t,
                                 const Eigen::Vector3d& x,
                                 const std::vector<Eigen::Matrix3d>& samples,
                                 double rel_tol);

struct Segment {
  int first = 0;  // node indices, inclusive
  int last = 0;
  int dim = 0;
  int length() const { return last - first + 1; }
};

/// Per-node symmetry dimensions over a time grid, segmented into maximal
/// runs of constant dimension. jump_nodes holds the first node of every
/// segment after the first.
struct DimensionProfile {
  std::vector<double> t_nodes;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  std::vector<int> dims;
  std::vector<Segment> segments;
  std::vector<int> jump_nodes;
};

DimensionProfile build_profile(const std::vector<double>& t_nodes,
                               const Eigen::Vector3d& x,
                               const std::vector<int>& dims);

struct ProfileResult {
  std::vector<SymmetryAlgebra> algebras;
  DimensionProfile profile;
};

ProfileResult dimension_profile(const dsl::ResponseModel& model,
                                const std::vector<double>& t_nodes,
                                const Eigen::Vector3d& x,
                                const std::vector<Eigen::Matrix3d>& samples,
                                double rel_tol);

}  // namespace matevo::symmetry
