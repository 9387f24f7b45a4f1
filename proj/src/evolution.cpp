#include "matevo/evolution.hpp"

namespace matevo::evolution {

num::ConstraintMatrix evolution_constraints(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples) {
  const int m = model.component_count();
  const int k = static_cast<int>(samples.size());
  num::ConstraintMatrix out;
  out.entries.resize(m * k, 13);
  out.tags.reserve(static_cast<std::size_t>(m) * k);

  dsl::EvalPoint p;
  p.t = t;
  p.x = x;
  for (int s = 0; s < k; ++s) {
    p.F = samples[s];
    const dsl::ResponseJet jet = dsl::eval_with_jet(model, p);
    for (int c = 0; c < m; ++c) {
      const int row = s * m + c;
      out.entries(row, 0) = jet.d_t(c);
      for (int i = 0; i < 3; ++i) out.entries(row, 1 + i) = jet.d_x(c, i);
      const Eigen::Matrix3d r = p.F.transpose() * jet.d_F_matrix(c);
      for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 3; ++j) out.entries(row, 4 + 3 * l + j) = r(l, j);
      out.tags.push_back({s, c, -1});
    }
  }
  return out;
}

num::ConstraintMatrix evolution_constraints_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples) {
  const int m = model.component_count();
  const int k = static_cast<int>(samples.size());
  num::ConstraintMatrix out;
  out.entries.resize(m * k, 10);
  out.tags.reserve(static_cast<std::size_t>(m) * k);

  dsl::EvalPoint p;
  p.t = t;
  p.x = x;
  for (int s = 0; s < k; ++s) {
    p.F = samples[s];
    const dsl::ResponseJet jet = dsl::eval_with_jet(model, p);
    for (int c = 0; c < m; ++c) {
      const int row = s * m + c;
      out.entries(row, 0) = jet.d_t(c);
      const Eigen::Matrix3d r = p.F.transpose() * jet.d_F_matrix(c);
      for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 3; ++j) out.entries(row, 1 + 3 * l + j) = r(l, j);
      out.tags.push_back({s, c, -1});
    }
  }
  return out;
}

EvolutionFibre evolution_fibre(const dsl::ResponseModel& model, double t,
                               const Eigen::Vector3d& x,
                               const std::vector<Eigen::Matrix3d>& samples,
                               double rel_tol) {
  EvolutionFibre out;
  out.t = t;
  out.x = x;
  out.basis =
      num::nullspace(evolution_constraints(model, t, x, samples), rel_tol);
  out.dim = out.basis.dim;
  out.base_dim = num::block_rank(out.basis.basis.topRows(4), rel_tol);
  return out;
}

XEvolutionFibre evolution_fibre_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples, double rel_tol) {
  XEvolutionFibre out;
  out.t = t;
  out.basis = num::nullspace(evolution_constraints_at_X(model, t, x, samples),
                             rel_tol);
  out.dim = out.basis.dim;
  out.base_dim = num::block_rank(out.basis.basis.topRows(1), rel_tol);
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::SmoothRemodeling: return "smooth-remodeling";
    case Verdict::SmoothAging: return "smooth-aging";
    case Verdict::Mixed: return "mixed";
  }
  return "?";
}

Verdict classify_evolution(const std::vector<int>& base_dims) {
  if (base_dims.empty())
    throw ConfigError("classify_evolution on an empty profile");
  bool all_one = true, all_zero = true;
  for (int b : base_dims) {
    if (b != 1) all_one = false;
    if (b != 0) all_zero = false;
  }
  if (all_one) return Verdict::SmoothRemodeling;
  if (all_zero) return Verdict::SmoothAging;
  return Verdict::Mixed;
}

}  // namespace matevo::evolution
