#include "matevo/morphogenesis.hpp"

namespace matevo::morpho {

namespace {

Eigen::Matrix3d unflatten(const Eigen::MatrixXd& frame, int column) {
  Eigen::Matrix3d m;
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j) m(l, j) = frame(3 * l + j, column);
  return m;
}

double frob_inner(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  return (a.array() * b.array()).sum();
}

// Rows for one node. Columns: lambda | (Th^1..Th^3 when with_x) | Th(l,j).
// The Th(l,j) coefficient of <R, Th*L - L*Th> is (R*L' - L'*R)(l, j) with
// R = F' * dW_c/dF.
num::ConstraintMatrix assemble(const dsl::ResponseModel& model, double t,
                               const Eigen::Vector3d& x,
                               const Eigen::MatrixXd& frame,
                               const Eigen::MatrixXd& frame_dt,
                               const std::array<Eigen::MatrixXd, 3>* frame_dx,
                               const std::vector<Eigen::Matrix3d>& samples) {
  const bool with_x = frame_dx != nullptr;
  const int q = with_x ? 13 : 10;
  const int theta_off = with_x ? 4 : 1;
  const int m = model.component_count();
  const int k = static_cast<int>(samples.size());
  const int d = static_cast<int>(frame.cols());
  if (frame.rows() != 9 || frame_dt.rows() != 9 || frame_dt.cols() != d)
    throw ConfigError("frame and its derivative must be 9 x dim");

  num::ConstraintMatrix out;
  out.entries.resize(static_cast<Eigen::Index>(m) * k * d, q);
  if (d == 0) {
    // vacuous constraint set; callers get the full unknown space
    out.entries.resize(1, q);
    out.entries.setZero();
    return out;
  }
  out.tags.reserve(static_cast<std::size_t>(m) * k * d);

  dsl::EvalPoint p;
  p.t = t;
  p.x = x;
  int row = 0;
  for (int s = 0; s < k; ++s) {
    p.F = samples[s];
    const dsl::ResponseJet jet = dsl::eval_with_jet(model, p);
    for (int c = 0; c < m; ++c) {
      const Eigen::Matrix3d r = p.F.transpose() * jet.d_F_matrix(c);
      for (int b = 0; b < d; ++b, ++row) {
        const Eigen::Matrix3d lam = unflatten(frame, b);
        const Eigen::Matrix3d lam_dt = unflatten(frame_dt, b);
        out.entries(row, 0) = frob_inner(r, lam_dt);
        if (with_x)
          for (int i = 0; i < 3; ++i)
            out.entries(row, 1 + i) = frob_inner(r, unflatten((*frame_dx)[i], b));
        const Eigen::Matrix3d coeff =
            r * lam.transpose() - lam.transpose() * r;
        for (int l = 0; l < 3; ++l)
          for (int j = 0; j < 3; ++j)
            out.entries(row, theta_off + 3 * l + j) = coeff(l, j);
        out.tags.push_back({s, c, b});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SymmetryFrameField> symmetry_frame_field(
    const std::vector<symmetry::SymmetryAlgebra>& algebras,
    const symmetry::DimensionProfile& profile, double t_step) {
  if (algebras.size() != profile.dims.size())
    throw ConfigError("frame field: algebra and profile sizes differ");

  std::vector<SymmetryFrameField> out;
  out.reserve(profile.segments.size());
  for (const symmetry::Segment& seg : profile.segments) {
    SymmetryFrameField field;
    field.first = seg.first;
    field.last = seg.last;
    field.dim = seg.dim;

    if (seg.dim == 0) {
      // no symmetry directions: empty frames, vacuously differentiable
      field.has_derivatives = true;
      field.frames.assign(seg.length(), Eigen::MatrixXd(9, 0));
      field.d_t.assign(seg.length(), Eigen::MatrixXd(9, 0));
      out.push_back(std::move(field));
      continue;
    }

    field.frames.reserve(seg.length());
    field.frames.push_back(algebras[seg.first].basis.basis);
    for (int i = seg.first + 1; i <= seg.last; ++i)
      field.frames.push_back(
          num::procrustes_align(field.frames.back(),
                                algebras[i].basis.basis));

    if (seg.length() >= 3) {
      field.d_t = num::fd_derivative(field.frames, t_step);
      field.has_derivatives = true;
    }
    out.push_back(std::move(field));
  }
  return out;
}

num::ConstraintMatrix morphogenesis_constraints_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::vector<Eigen::Matrix3d>& samples) {
  return assemble(model, t, x, frame, frame_dt, nullptr, samples);
}

num::ConstraintMatrix morphogenesis_constraints(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::array<Eigen::MatrixXd, 3>& frame_dx,
    const std::vector<Eigen::Matrix3d>& samples) {
  return assemble(model, t, x, frame, frame_dt, &frame_dx, samples);
}

MorphogenesisFibre morphogenesis_fibre_at_X(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::vector<Eigen::Matrix3d>& samples, double rel_tol) {
  MorphogenesisFibre out;
  out.t = t;
  out.x = x;
  out.basis = num::nullspace(
      morphogenesis_constraints_at_X(model, t, x, frame, frame_dt, samples),
      rel_tol);
  out.dim = out.basis.dim;
  out.base_dim = num::block_rank(out.basis.basis.topRows(1), rel_tol);
  return out;
}

MorphogenesisFibre morphogenesis_fibre(
    const dsl::ResponseModel& model, double t, const Eigen::Vector3d& x,
    const Eigen::MatrixXd& frame, const Eigen::MatrixXd& frame_dt,
    const std::array<Eigen::MatrixXd, 3>& frame_dx,
    const std::vector<Eigen::Matrix3d>& samples, double rel_tol) {
  MorphogenesisFibre out;
  out.t = t;
  out.x = x;
  out.basis = num::nullspace(
      morphogenesis_constraints(model, t, x, frame, frame_dt, frame_dx,
                                samples),
      rel_tol);
  out.dim = out.basis.dim;
  out.base_dim = num::block_rank(out.basis.basis.topRows(4), rel_tol);
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NoMorphogenesis: return "no-morphogenesis";
    case Verdict::Morphogenesis: return "morphogenesis";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

Verdict classify_morphogenesis(
    const symmetry::DimensionProfile& profile,
    const std::vector<std::optional<MorphogenesisFibre>>& fibres) {
  if (fibres.size() != profile.dims.size())
    throw ConfigError("classify_morphogenesis: grid mismatch");

  // tier 1: non-constant symmetry dimension is a symmetry breakdown
  if (profile.segments.size() >= 2) return Verdict::Morphogenesis;

  // tier 2: the rank condition on the extended fibre at X
  bool all_computed = true;
  for (const auto& fibre : fibres) {
    if (!fibre.has_value()) {
      all_computed = false;
      continue;
    }
    if (fibre->base_dim == 0) return Verdict::Morphogenesis;
  }
  return all_computed ? Verdict::NoMorphogenesis : Verdict::Undetermined;
}

}  // namespace matevo::morpho
