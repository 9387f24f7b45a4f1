#include "matevo/symmetry.hpp"

namespace matevo::symmetry {

num::ConstraintMatrix symmetry_constraints(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const std::vector<Eigen::Matrix3d>& samples) {
  const int m = model.component_count();
  const int k = static_cast<int>(samples.size());
  num::ConstraintMatrix out;
  out.entries.resize(m * k, 9);
  out.tags.reserve(static_cast<std::size_t>(m) * k);

  dsl::EvalPoint p;
  p.t = t;
  p.x = x;
  for (int s = 0; s < k; ++s) {
    p.F = samples[s];
    const dsl::ResponseJet jet = dsl::eval_with_jet(model, p);
    for (int c = 0; c < m; ++c) {
      const Eigen::Matrix3d r = p.F.transpose() * jet.d_F_matrix(c);
      const int row = s * m + c;
      for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 3; ++j) out.entries(row, 3 * l + j) = r(l, j);
      out.tags.push_back({s, c, -1});
    }
  }
  return out;
}

SymmetryAlgebra symmetry_algebra(const dsl::ResponseModel& model, double t,
                                 const Eigen::Vector3d& x,
                                 const std::vector<Eigen::Matrix3d>& samples,
                                 double rel_tol) {
  SymmetryAlgebra out;
  out.t = t;
  out.x = x;
  out.basis = num::nullspace(symmetry_constraints(model, t, x, samples),
                             rel_tol);
  out.dim = out.basis.dim;
  return out;
}

DimensionProfile build_profile(const std::vector<double>& t_nodes,
                               const Eigen::Vector3d& x,
                               const std::vector<int>& dims) {
  if (t_nodes.size() != dims.size())
    throw ConfigError("profile: node and dim counts differ");
  DimensionProfile profile;
  profile.t_nodes = t_nodes;
  profile.x = x;
  profile.dims = dims;
  const int n = static_cast<int>(dims.size());
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || dims[i] != dims[start]) {
      profile.segments.push_back({start, i - 1, dims[start]});
      if (i < n) profile.jump_nodes.push_back(i);
      start = i;
    }
  }
  return profile;
}

ProfileResult dimension_profile(const dsl::ResponseModel& model,
                                const std::vector<double>& t_nodes,
                                const Eigen::Vector3d& x,
                                const std::vector<Eigen::Matrix3d>& samples,
                                double rel_tol) {
  if (t_nodes.size() < 2)
    throw ConfigError("dimension profile needs at least 2 nodes");
  ProfileResult out;
  out.algebras.reserve(t_nodes.size());
  std::vector<int> dims;
  dims.reserve(t_nodes.size());
  for (double t : t_nodes) {
    out.algebras.push_back(symmetry_algebra(model, t, x, samples, rel_tol));
    dims.push_back(out.algebras.back().dim);
  }
  out.profile = build_profile(t_nodes, x, dims);
  return out;
}

}  // namespace matevo::symmetry
