#include "matevo/evolution.hpp"

#include "doctest.h"
#include "matevo/symmetry.hpp"
#include "oracle_helpers.hpp"

using namespace matevo;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

const double kTol = 1e-8;

std::vector<Eigen::Matrix3d> samples() {
  static const auto s = dsl::sample_deformations(42, 40, 0.2);
  return s;
}

// particle-fibre coordinates (lambda, Th row-major)
VectorXd x_vec(double lambda, const Eigen::Matrix3d& theta) {
  VectorXd v(10);
  v(0) = lambda;
  v.tail(9) = oracle::flatten(theta);
  return v;
}

}  // namespace

TEST_CASE("scenario D at X: volume-changing remodeling fibre") {
  const dsl::ResponseModel d = dsl::builtin_scenario("D");
  for (double t : {-1.0, 0.0, 0.6}) {
    const auto fibre =
        evolution::evolution_fibre_at_X(d, t, Vector3d::Zero(), samples(), kTol);
    REQUIRE(fibre.dim == 4);
    CHECK(fibre.base_dim == 1);
    // analytic solutions: lambda free with symmetric part -lambda*I, plus
    // the rotations
    const VectorXd grow =
        x_vec(1.0, -Eigen::Matrix3d::Identity()) / std::sqrt(4.0);
    CHECK(num::projection_residual(fibre.basis.basis, grow) < 1e-8);
    for (const Eigen::Matrix3d& gen :
         {oracle::rot_gen_x(), oracle::rot_gen_y(), oracle::rot_gen_z()}) {
      const VectorXd rot = x_vec(0.0, gen) / std::sqrt(2.0);
      CHECK(num::projection_residual(fibre.basis.basis, rot) < 1e-8);
    }
  }
}

TEST_CASE("scenario B at X: aging fibre (lambda forced to zero)") {
  const dsl::ResponseModel b = dsl::builtin_scenario("B");
  for (double t : {-0.8, 0.0, 0.25, 1.0}) {
    const auto fibre =
        evolution::evolution_fibre_at_X(b, t, Vector3d::Zero(), samples(), kTol);
    REQUIRE(fibre.dim == 3);
    CHECK(fibre.base_dim == 0);
    // the lambda row of the basis is numerically zero
    CHECK(fibre.basis.basis.row(0).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("scenario A at X: only the time direction") {
  const auto fibre = evolution::evolution_fibre_at_X(
      dsl::builtin_scenario("A"), 0.4, Vector3d::Zero(), samples(), kTol);
  REQUIRE(fibre.dim == 1);
  CHECK(fibre.base_dim == 1);
  CHECK(std::abs(std::abs(fibre.basis.basis(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("scenario A full system: time and body translations") {
  const auto fibre = evolution::evolution_fibre(
      dsl::builtin_scenario("A"), 0.0, Vector3d::Zero(), samples(), kTol);
  CHECK(fibre.dim == 4);
  CHECK(fibre.base_dim == 4);
}

TEST_CASE("scenario E full system at x = (0.3, 0, 0)") {
  const auto fibre = evolution::evolution_fibre(
      dsl::builtin_scenario("E"), 0.0, Vector3d(0.3, 0.0, 0.0), samples(),
      kTol);
  CHECK(fibre.dim == 7);
  CHECK(fibre.base_dim == 4);

  // analytic member: moving along x1 with the compensating stretch
  // Th_sym = -(x1*Th^1/h)*I, h = 1 + x1^2
  const double x1 = 0.3, h = 1.0 + x1 * x1;
  VectorXd v = VectorXd::Zero(13);
  v(1) = 1.0;  // Th^1
  v.tail(9) = oracle::flatten(-(x1 / h) * Eigen::Matrix3d::Identity());
  v.normalize();
  CHECK(num::projection_residual(fibre.basis.basis, v) < 1e-8);
}

TEST_CASE("scenario D full system: x-block free") {
  const auto fibre = evolution::evolution_fibre(
      dsl::builtin_scenario("D"), 0.2, Vector3d::Zero(), samples(), kTol);
  CHECK(fibre.dim == 7);  // the at-X fibre plus three body translations
  CHECK(fibre.base_dim == 4);
}

TEST_CASE("symmetry algebra embeds into the particle fibre") {
  // (0, L) solves the particle evolution equation for every symmetry L
  for (const std::string name : {"B", "C", "D", "E"}) {
    const dsl::ResponseModel m = dsl::builtin_scenario(name);
    for (double t : {-0.6, 0.3}) {
      const Vector3d x(0.2, 0.0, 0.0);
      const auto alg = symmetry::symmetry_algebra(m, t, x, samples(), kTol);
      const auto fibre =
          evolution::evolution_fibre_at_X(m, t, x, samples(), kTol);
      for (int b = 0; b < alg.dim; ++b) {
        VectorXd v = VectorXd::Zero(10);
        v.tail(9) = alg.basis.basis.col(b);
        CHECK(num::projection_residual(fibre.basis.basis, v) <= 1e-8);
      }
    }
  }
}

TEST_CASE("classification over profiles") {
  using evolution::Verdict;
  auto base_dims = [](const std::string& name, double lo, double hi, int n) {
    const dsl::ResponseModel m = dsl::builtin_scenario(name);
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
      const double t = ((n - 1 - k) * lo + k * hi) / (n - 1);
      out.push_back(evolution::evolution_fibre_at_X(m, t, Vector3d::Zero(),
                                                    samples(), kTol)
                        .base_dim);
    }
    return out;
  };
  CHECK(evolution::classify_evolution(base_dims("D", -1, 1, 11)) ==
        Verdict::SmoothRemodeling);
  CHECK(evolution::classify_evolution(base_dims("B", -1, 1, 11)) ==
        Verdict::SmoothAging);
  CHECK(evolution::classify_evolution(base_dims("A", -1, 1, 5)) ==
        Verdict::SmoothRemodeling);
}

TEST_CASE("a mixed profile is recognized") {
  // remodeling at t = 0 only: the time derivative vanishes there
  const dsl::ResponseModel m =
      dsl::parse_response("tr(matmul(transpose(F),F)) + t^2*det(F)");
  std::vector<int> dims;
  for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0})
    dims.push_back(evolution::evolution_fibre_at_X(m, t, Vector3d::Zero(),
                                                   samples(), kTol)
                       .base_dim);
  CHECK(dims == std::vector<int>{0, 0, 1, 0, 0});
  CHECK(evolution::classify_evolution(dims) == evolution::Verdict::Mixed);
}

TEST_CASE("dims are stable under scaling, resampling and tolerance sweeps") {
  const auto more = dsl::sample_deformations(9, 80, 0.2);
  for (const std::string name : {"A", "B", "D", "E"}) {
    const dsl::ResponseModel m = dsl::builtin_scenario(name);
    const dsl::ResponseModel scaled = dsl::scale_model(m, 1000.0);
    const Vector3d x(0.3, 0.0, 0.0);
    for (double t : {-0.7, 0.1}) {
      const auto ref = evolution::evolution_fibre_at_X(m, t, x, samples(), kTol);
      for (double tol : {1e-10, 1e-8, 1e-6}) {
        const auto sweep = evolution::evolution_fibre_at_X(m, t, x, samples(), tol);
        CHECK(sweep.dim == ref.dim);
        CHECK(sweep.base_dim == ref.base_dim);
      }
      const auto resampled = evolution::evolution_fibre_at_X(m, t, x, more, kTol);
      CHECK(resampled.dim == ref.dim);
      CHECK(resampled.base_dim == ref.base_dim);
      const auto big = evolution::evolution_fibre_at_X(scaled, t, x, samples(), kTol);
      CHECK(big.dim == ref.dim);
      CHECK(big.base_dim == ref.base_dim);
    }
  }
}
