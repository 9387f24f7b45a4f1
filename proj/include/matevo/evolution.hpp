#pragma once

#include <Eigen/Dense>
#include <vector>

#include "matevo/dsl.hpp"
#include "matevo/numkernel.hpp"

namespace matevo::evolution {

// ---------------------------------------------------------------------------
// Material distribution fibres at a point, realized as kernels of sampled
// linear systems.
//
// Full system, 13 unknowns ordered (lambda, Th^1, Th^2, Th^3, Th(l,j)
// row-major): for every sample F and component c,
//
//   lambda*dW_c/dt + Th^i*dW_c/dx^i + <dW_c/dF, F*Th> = 0.
//
// At a fixed particle the x-block is absent (10 unknowns). The base
// projection keeps the (lambda, Th^i) block (lambda alone at X); its rank
// is the fibre's footprint on the body-time coordinates.
// ---------------------------------------------------------------------------

struct EvolutionFibre {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  num::NullspaceBasis basis;  // 13 x dim
  int dim = 0;
  int base_dim = 0;  // rank of the (lambda, Th^i) block, 0..4
};

struct XEvolutionFibre {
  double t = 0.0;
  num::NullspaceBasis basis;  // 10 x dim
  int dim = 0;
  int base_dim = 0;  // 0 or 1: lambda reachable or not
};

num::ConstraintMatrix evolution_constraints(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples);

num::ConstraintMatrix evolution_constraints_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples);

EvolutionFibre evolution_fibre(const dsl::ResponseModel& model, double t,
                               const Eigen::Vector3d& x,
                               const std::vector<Eigen::Matrix3d>& samples,
                               double rel_tol);

XEvolutionFibre evolution_fibre_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples, double rel_tol);

enum class Verdict { SmoothRemodeling, SmoothAging, Mixed };

const char* to_string(Verdict v);

/// smooth-remodeling iff base_dim = 1 at every node, smooth-aging iff 0 at
/// every node, mixed otherwise.
Verdict classify_evolution(const std::vector<int>& base_dims);

}  // namespace matevo::evolution
