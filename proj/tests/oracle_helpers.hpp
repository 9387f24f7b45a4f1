// Analytic oracles shared by the unit and acceptance suites. Everything
// here is independent of the nullspace/jet implementation paths it checks:
// spans are written down from the closed-form solution sets and derivatives
// come from central finite differences.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "matevo/dsl.hpp"
#include "matevo/numkernel.hpp"

namespace oracle {

inline Eigen::VectorXd flatten(const Eigen::Matrix3d& m) {
  Eigen::VectorXd v(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) v(3 * r + c) = m(r, c);
  return v;
}

inline Eigen::Matrix3d unflatten(const Eigen::VectorXd& v) {
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v(3 * r + c);
  return m;
}

inline Eigen::Matrix3d basis_matrix(int r, int c) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(r, c) = 1.0;
  return m;
}

// generators of rotations about the coordinate axes
inline Eigen::Matrix3d rot_gen_x() {
  return basis_matrix(1, 2) - basis_matrix(2, 1);
}
inline Eigen::Matrix3d rot_gen_y() {
  return basis_matrix(2, 0) - basis_matrix(0, 2);
}
inline Eigen::Matrix3d rot_gen_z() {
  return basis_matrix(0, 1) - basis_matrix(1, 0);
}

/// Orthonormal basis of the skew matrices (solutions of d tr(F'F) = 0).
inline Eigen::MatrixXd skew_span() {
  Eigen::MatrixXd s(9, 3);
  s.col(0) = flatten(rot_gen_x()) / std::sqrt(2.0);
  s.col(1) = flatten(rot_gen_y()) / std::sqrt(2.0);
  s.col(2) = flatten(rot_gen_z()) / std::sqrt(2.0);
  return s;
}

/// Orthonormal basis of the trace-free matrices (solutions of
/// d det(F) = 0).
inline Eigen::MatrixXd tracefree_span() {
  Eigen::MatrixXd s(9, 8);
  int col = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c) s.col(col++) = flatten(basis_matrix(r, c));
  Eigen::Matrix3d d1 = Eigen::Matrix3d::Zero();
  d1.diagonal() << 1, -1, 0;
  Eigen::Matrix3d d2 = Eigen::Matrix3d::Zero();
  d2.diagonal() << 1, 1, -2;
  s.col(6) = flatten(d1) / std::sqrt(2.0);
  s.col(7) = flatten(d2) / std::sqrt(6.0);
  return s;
}

/// so(3) + R*I: the matrices commuting-friendly under every skew bracket.
inline Eigen::MatrixXd so3_plus_scaling_span() {
  Eigen::MatrixXd s(9, 4);
  s.leftCols(3) = skew_span();
  s.col(3) = flatten(Eigen::Matrix3d::Identity()) / std::sqrt(3.0);
  return s;
}

/// Rotations fixing e3.
inline Eigen::MatrixXd rot_z_span() {
  Eigen::MatrixXd s(9, 1);
  s.col(0) = flatten(rot_gen_z()) / std::sqrt(2.0);
  return s;
}

inline double max_principal_angle(const Eigen::MatrixXd& a,
                                  const Eigen::MatrixXd& b) {
  const Eigen::VectorXd angles = matevo::num::principal_angles(a, b);
  return angles.size() == 0 ? 0.0 : angles(angles.size() - 1);
}

/// Independent derivative oracle: central finite differences of the model
/// value in all 13 directions.
inline matevo::dsl::ResponseJet fd_jet(const matevo::dsl::ResponseModel& model,
                                       const matevo::dsl::EvalPoint& p,
                                       double h = 1e-5) {
  using matevo::dsl::EvalPoint;
  auto value = [&model](const EvalPoint& q) {
    return matevo::dsl::eval_with_jet(model, q).value;
  };
  const int m = model.component_count();
  matevo::dsl::ResponseJet jet;
  jet.value = value(p);
  jet.d_t.resize(m);
  jet.d_x.resize(m, 3);
  jet.d_F.resize(m, 9);

  EvalPoint hi = p, lo = p;
  hi.t += h;
  lo.t -= h;
  jet.d_t = (value(hi) - value(lo)) / (2 * h);
  for (int i = 0; i < 3; ++i) {
    hi = p;
    lo = p;
    hi.x(i) += h;
    lo.x(i) -= h;
    jet.d_x.col(i) = (value(hi) - value(lo)) / (2 * h);
  }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      hi = p;
      lo = p;
      hi.F(r, c) += h;
      lo.F(r, c) -= h;
      jet.d_F.col(3 * r + c) = (value(hi) - value(lo)) / (2 * h);
    }
  return jet;
}

/// Seeded evaluation points with |det F| bounded away from zero.
inline std::vector<matevo::dsl::EvalPoint> random_points(std::uint64_t seed,
                                                         int count) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  };
  std::vector<matevo::dsl::EvalPoint> out;
  while (static_cast<int>(out.size()) < count) {
    matevo::dsl::EvalPoint p;
    p.t = uniform(-1.0, 1.0);
    for (int i = 0; i < 3; ++i) p.x(i) = uniform(-0.5, 0.5);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        p.F(r, c) = (r == c ? 1.0 : 0.0) + uniform(-0.4, 0.4);
    if (std::abs(p.F.determinant()) < 0.25) continue;
    out.push_back(p);
  }
  return out;
}

inline double rel_error(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace oracle
