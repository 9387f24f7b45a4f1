#include "matevo/symmetry.hpp"

#include "doctest.h"
#include "oracle_helpers.hpp"

using namespace matevo;
using Eigen::Vector3d;

namespace {

const double kTol = 1e-8;

std::vector<Eigen::Matrix3d> samples() {
  static const auto s = dsl::sample_deformations(42, 40, 0.2);
  return s;
}

std::vector<double> grid41() {
  std::vector<double> ts(41);
  for (int k = 0; k < 41; ++k) ts[k] = (-(40.0 - k) + k) / 40.0;
  return ts;
}

}  // namespace

TEST_CASE("tr(F'F) has the skew algebra") {
  const auto alg = symmetry::symmetry_algebra(
      dsl::parse_response("tr(matmul(transpose(F),F))"), 0.0,
      Vector3d::Zero(), samples(), kTol);
  REQUIRE(alg.dim == 3);
  CHECK(oracle::max_principal_angle(alg.basis.basis, oracle::skew_span()) <
        1e-6);
}

TEST_CASE("det F has the trace-free algebra") {
  const auto alg =
      symmetry::symmetry_algebra(dsl::parse_response("det(F)"), 0.0,
                                 Vector3d::Zero(), samples(), kTol);
  REQUIRE(alg.dim == 8);
  CHECK(oracle::max_principal_angle(alg.basis.basis, oracle::tracefree_span()) <
        1e-6);
}

TEST_CASE("scenario A has no symmetries") {
  const auto alg = symmetry::symmetry_algebra(
      dsl::builtin_scenario("A"), 0.3, Vector3d::Zero(), samples(), kTol);
  CHECK(alg.dim == 0);
}

TEST_CASE("scenario C: full rotation algebra only at t = 0") {
  const dsl::ResponseModel c = dsl::builtin_scenario("C");
  const auto at0 =
      symmetry::symmetry_algebra(c, 0.0, Vector3d::Zero(), samples(), kTol);
  CHECK(at0.dim == 3);
  const auto at_half =
      symmetry::symmetry_algebra(c, 0.5, Vector3d::Zero(), samples(), kTol);
  REQUIRE(at_half.dim == 1);
  CHECK(oracle::max_principal_angle(at_half.basis.basis, oracle::rot_z_span()) <
        1e-6);
  const auto at_neg =
      symmetry::symmetry_algebra(c, -0.05, Vector3d::Zero(), samples(), kTol);
  CHECK(at_neg.dim == 1);
}

TEST_CASE("dimension profile: scenario B is one flat segment") {
  const auto result = symmetry::dimension_profile(
      dsl::builtin_scenario("B"), grid41(), Vector3d::Zero(), samples(), kTol);
  REQUIRE(result.profile.segments.size() == 1);
  CHECK(result.profile.segments[0].dim == 3);
  CHECK(result.profile.jump_nodes.empty());
}

TEST_CASE("dimension profile: scenario C jumps at the t = 0 node") {
  const auto result = symmetry::dimension_profile(
      dsl::builtin_scenario("C"), grid41(), Vector3d::Zero(), samples(), kTol);
  REQUIRE(result.profile.segments.size() == 3);
  CHECK(result.profile.segments[0].dim == 1);
  CHECK(result.profile.segments[1].dim == 3);
  CHECK(result.profile.segments[1].first == 20);
  CHECK(result.profile.segments[1].last == 20);
  CHECK(result.profile.t_nodes[20] == 0.0);
  CHECK(result.profile.segments[2].dim == 1);
  CHECK(result.profile.jump_nodes == std::vector<int>{20, 21});
}

TEST_CASE("dimension profile: scenario A is identically zero") {
  const auto result = symmetry::dimension_profile(
      dsl::builtin_scenario("A"), grid41(), Vector3d::Zero(), samples(), kTol);
  for (int d : result.profile.dims) CHECK(d == 0);
  CHECK(result.profile.segments.size() == 1);
}

TEST_CASE("bracket closure of computed algebras") {
  // the span of solutions is a Lie algebra; check commutator closure
  auto check_closure = [](const symmetry::SymmetryAlgebra& alg) {
    if (alg.dim < 2) return;
    for (int a = 0; a < alg.dim; ++a)
      for (int b = a + 1; b < alg.dim; ++b) {
        const Eigen::Matrix3d la = oracle::unflatten(alg.basis.basis.col(a));
        const Eigen::Matrix3d lb = oracle::unflatten(alg.basis.basis.col(b));
        const Eigen::VectorXd bracket = oracle::flatten(la * lb - lb * la);
        CHECK(num::projection_residual(alg.basis.basis, bracket) <= 1e-6);
      }
  };
  for (const std::string name : {"B", "D", "E"}) {
    const dsl::ResponseModel m = dsl::builtin_scenario(name);
    for (double t : {-1.0, -0.4, 0.0, 0.7})
      check_closure(symmetry::symmetry_algebra(m, t, Vector3d(0.2, 0, 0),
                                               samples(), kTol));
  }
  check_closure(symmetry::symmetry_algebra(
      dsl::parse_response("det(F)"), 0.0, Vector3d::Zero(), samples(), kTol));
}

TEST_CASE("scale invariance: c*W keeps dimension and span") {
  const dsl::ResponseModel b = dsl::builtin_scenario("B");
  const dsl::ResponseModel scaled = dsl::scale_model(b, 1000.0);
  const auto alg =
      symmetry::symmetry_algebra(b, 0.5, Vector3d::Zero(), samples(), kTol);
  const auto alg_scaled = symmetry::symmetry_algebra(scaled, 0.5,
                                                     Vector3d::Zero(),
                                                     samples(), kTol);
  REQUIRE(alg.dim == alg_scaled.dim);
  CHECK(oracle::max_principal_angle(alg.basis.basis, alg_scaled.basis.basis) <
        1e-8);
}

TEST_CASE("sampling stability: doubling K with a new seed keeps dims") {
  const auto more = dsl::sample_deformations(9, 80, 0.2);
  for (const std::string name : {"A", "B", "C", "D", "E"}) {
    const dsl::ResponseModel m = dsl::builtin_scenario(name);
    for (double t : {-1.0, -0.35, 0.0, 0.5, 1.0}) {
      const Vector3d x(0.25, 0, 0);
      const int dim40 =
          symmetry::symmetry_algebra(m, t, x, samples(), kTol).dim;
      const int dim80 = symmetry::symmetry_algebra(m, t, x, more, kTol).dim;
      CHECK(dim40 == dim80);
    }
  }
}

TEST_CASE("evaluation failures propagate out of the assembly") {
  // 1/t blows up at the t = 0 node
  CHECK_THROWS_AS(symmetry::symmetry_algebra(
                      dsl::parse_response("tr(F)/t"), 0.0, Vector3d::Zero(),
                      samples(), kTol),
                  EvalError);
}

TEST_CASE("profile needs at least two nodes") {
  CHECK_THROWS_AS(
      symmetry::dimension_profile(dsl::builtin_scenario("B"), {0.0},
                                  Vector3d::Zero(), samples(), kTol),
      ConfigError);
}
