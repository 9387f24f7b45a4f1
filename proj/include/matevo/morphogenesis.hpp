#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

#include "matevo/evolution.hpp"
#include "matevo/symmetry.hpp"

namespace matevo::morpho {

// ---------------------------------------------------------------------------
// Extended material distribution fibres. Their coefficient rows use a
// smoothly aligned basis field of the symmetry algebra (the frame field):
// for each frame element L with time derivative dL and body derivatives
// dLx[k], for every sample F and component c,
//
//   <dW_c/dF, F*(Th*L - L*Th + lambda*dL + Th^k*dLx[k])> = 0
//
// over the unknowns (lambda, Th^i, Th(l,j)); the Th^k block is dropped at a
// fixed particle.
// ---------------------------------------------------------------------------

/// Aligned symmetry bases over one constant-dimension run of grid nodes.
/// frames[i] is the 9 x dim basis at node first + i; d_t holds the
/// finite-difference time derivatives when the run is long enough.
struct SymmetryFrameField {
  int first = 0;
  int last = 0;
  int dim = 0;
  bool has_derivatives = false;
  std::vector<Eigen::MatrixXd> frames;
  std::vector<Eigen::MatrixXd> d_t;
};

/// Wrap the per-node symmetry algebras into per-segment frame fields:
/// Procrustes-aligned left to right inside each segment, time derivatives
/// by finite differences. Runs of positive dimension shorter than 3 nodes
/// carry no derivatives and are flagged; zero-dimension runs need none.
std::vector<SymmetryFrameField> symmetry_frame_field(
    const std::vector<symmetry::SymmetryAlgebra>& algebras,
    const symmetry::DimensionProfile& profile, double t_step);

struct MorphogenesisFibre {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  num::NullspaceBasis basis;  // 10 x dim at X, 13 x dim full
  int dim = 0;
  int base_dim = 0;
};

/// Constraint rows over (lambda, Th(l,j)), indexed (sample, component,
/// frame element).
num::ConstraintMatrix morphogenesis_constraints_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::vector<Eigen::Matrix3d>& samples);

/// Full-system rows over (lambda, Th^i, Th(l,j)).
num::ConstraintMatrix morphogenesis_constraints(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::array<Eigen::MatrixXd, 3>& frame_dx,
    const std::vector<Eigen::Matrix3d>& samples);

/// Fibre at a fixed particle: 10 unknowns (lambda, Th(l,j)).
MorphogenesisFibre morphogenesis_fibre_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::vector<Eigen::Matrix3d>& samples, double rel_tol);

/// Full fibre: 13 unknowns (lambda, Th^i, Th(l,j)); needs the frame's body
/// derivatives as well.
MorphogenesisFibre morphogenesis_fibre(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::array<Eigen::MatrixXd, 3>& frame_dx,
    const std::vector<Eigen::Matrix3d>& samples, double rel_tol);

enum class Verdict { NoMorphogenesis, Morphogenesis, Undetermined };

const char* to_string(Verdict v);

/// Two-tier decision: a dimension jump in the symmetry profile (segments of
/// distinct dims) means broken symmetry; otherwise the rank condition
/// base_dim = 1 at every node decides. Nodes without a computed fibre
/// (jump points, runs too short for derivatives) leave the verdict
/// undetermined rather than asserting absence without rank evidence.
Verdict classify_morphogenesis(
    const symmetry::DimensionProfile& profile,
    const std::vector<std::optional<MorphogenesisFibre>>& fibres);

}  // namespace matevo::morpho
