#include "matevo/analysis.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace matevo::report {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  // convex form keeps symmetric endpoints exact (a 41-node [-1, 1] grid
  // hits t = 0 exactly)
  for (int k = 0; k < n; ++k)
    out[k] = ((n - 1 - k) * lo + k * hi) / (n - 1);
  return out;
}

/// Deterministic static partition; results are written by index so the
/// output is independent of the thread count.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = std::min(threads, count);
  std::vector<std::thread> pool;
  std::mutex error_mutex;
  std::exception_ptr first_error;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct LineScratch {
  Eigen::Vector3d x;
  std::vector<symmetry::SymmetryAlgebra> algebras;
  std::vector<evolution::XEvolutionFibre> evo_x;
  std::vector<evolution::EvolutionFibre> evo_full;
  symmetry::DimensionProfile profile;
  std::vector<morpho::SymmetryFrameField> fields;
  std::vector<int> field_of_node;
  std::vector<std::optional<morpho::MorphogenesisFibre>> morph_x;
  std::vector<std::optional<morpho::MorphogenesisFibre>> morph_full;
  std::vector<std::optional<Eigen::MatrixXd>> frame_dx1;
};

std::string join_flags(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ';';
    out += t;
  }
  return out;
}

}  // namespace

void GridSpec::validate() const {
  if (!(t_min < t_max)) throw ConfigError("grid: t_min must be < t_max");
  if (t_steps < 2) throw ConfigError("grid: t_steps must be >= 2");
  if (samples < 26) throw ConfigError("grid: sample count must be >= 26");
  if (!(rel_tol > 0.0)) throw ConfigError("grid: rel_tol must be > 0");
  if (!(det_floor > 0.0 && det_floor < 1.0))
    throw ConfigError("grid: det_floor must lie in (0, 1)");
  if (full_body) {
    if (!(x1_min < x1_max))
      throw ConfigError("grid: x1_min must be < x1_max in full-body mode");
    if (x1_steps < 2)
      throw ConfigError("grid: x1_steps must be >= 2 in full-body mode");
  }
  if (threads < 0) throw ConfigError("grid: threads must be >= 0");
}

std::vector<double> GridSpec::t_nodes() const {
  return linspace(t_min, t_max, t_steps);
}

std::vector<double> GridSpec::x1_nodes() const {
  if (!full_body) return {x_fixed(0)};
  return linspace(x1_min, x1_max, x1_steps);
}

double GridSpec::t_step() const { return (t_max - t_min) / (t_steps - 1); }

double GridSpec::x1_step() const {
  return x1_steps < 2 ? 0.0 : (x1_max - x1_min) / (x1_steps - 1);
}

ClassificationReport analyze(const dsl::ResponseModel& model,
                             const GridSpec& grid) {
  grid.validate();
  const std::vector<double> ts = grid.t_nodes();
  const std::vector<double> x1s = grid.x1_nodes();
  const int nt = static_cast<int>(ts.size());
  const int nl = static_cast<int>(x1s.size());
  const std::vector<Eigen::Matrix3d> samples =
      dsl::sample_deformations(grid.seed, grid.samples, grid.det_floor);

  std::vector<LineScratch> scratch(static_cast<std::size_t>(nl));
  for (int p = 0; p < nl; ++p) {
    scratch[p].x = Eigen::Vector3d(x1s[p], grid.x_fixed(1), grid.x_fixed(2));
    scratch[p].algebras.resize(nt);
    scratch[p].evo_x.resize(nt);
    scratch[p].evo_full.resize(nt);
    scratch[p].morph_x.resize(nt);
    scratch[p].morph_full.resize(nt);
    scratch[p].frame_dx1.resize(nt);
  }

  // per-node symmetry algebras and evolution fibres
  parallel_for(nl * nt, grid.threads, [&](int flat) {
    const int p = flat / nt;
    const int i = flat % nt;
    LineScratch& line = scratch[p];
    line.algebras[i] = symmetry::symmetry_algebra(model, ts[i], line.x,
                                                  samples, grid.rel_tol);
    line.evo_x[i] = evolution::evolution_fibre_at_X(model, ts[i], line.x,
                                                    samples, grid.rel_tol);
    line.evo_full[i] =
        evolution::evolution_fibre(model, ts[i], line.x, samples, grid.rel_tol);
  });

  // segmentation and aligned frame fields (sequential along t)
  for (int p = 0; p < nl; ++p) {
    LineScratch& line = scratch[p];
    std::vector<int> dims(nt);
    for (int i = 0; i < nt; ++i) dims[i] = line.algebras[i].dim;
    line.profile = symmetry::build_profile(ts, line.x, dims);
    line.fields =
        morpho::symmetry_frame_field(line.algebras, line.profile, grid.t_step());
    line.field_of_node.assign(nt, -1);
    for (std::size_t f = 0; f < line.fields.size(); ++f)
      for (int i = line.fields[f].first; i <= line.fields[f].last; ++i)
        line.field_of_node[i] = static_cast<int>(f);
  }

  // cross-line gauge: rotate each segment's frames once so they match the
  // previous line where the dimensions agree; keeps x-differences small
  // without disturbing the in-line alignment
  if (grid.full_body) {
    for (int p = 1; p < nl; ++p) {
      LineScratch& line = scratch[p];
      const LineScratch& prev = scratch[p - 1];
      for (morpho::SymmetryFrameField& field : line.fields) {
        if (field.dim == 0) continue;
        const int i0 = field.first;
        const int pf = prev.field_of_node[i0];
        if (pf < 0) continue;
        const morpho::SymmetryFrameField& prev_field = prev.fields[pf];
        if (prev_field.dim != field.dim) continue;
        const Eigen::MatrixXd& anchor =
            prev_field.frames[i0 - prev_field.first];
        const Eigen::MatrixXd q =
            num::procrustes_rotation(anchor, field.frames.front());
        for (Eigen::MatrixXd& frame : field.frames) frame = frame * q;
        for (Eigen::MatrixXd& dt : field.d_t) dt = dt * q;
      }
    }

    // body derivatives of the frames: finite differences along x1 inside
    // maximal constant-dimension runs of at least 3 nodes
    for (int i = 0; i < nt; ++i) {
      int run_start = 0;
      while (run_start < nl) {
        const int d = scratch[run_start].profile.dims[i];
        int run_end = run_start;
        while (run_end + 1 < nl && scratch[run_end + 1].profile.dims[i] == d)
          ++run_end;
        const int len = run_end - run_start + 1;
        if (d > 0 && len >= 3) {
          std::vector<Eigen::MatrixXd> along_x;
          along_x.reserve(static_cast<std::size_t>(len));
          for (int p = run_start; p <= run_end; ++p) {
            const morpho::SymmetryFrameField& field =
                scratch[p].fields[scratch[p].field_of_node[i]];
            along_x.push_back(field.frames[i - field.first]);
          }
          const std::vector<Eigen::MatrixXd> dx =
              num::fd_derivative(along_x, grid.x1_step());
          for (int p = run_start; p <= run_end; ++p)
            scratch[p].frame_dx1[i] = dx[p - run_start];
        } else if (d == 0) {
          for (int p = run_start; p <= run_end; ++p)
            scratch[p].frame_dx1[i] = Eigen::MatrixXd(9, 0);
        }
        run_start = run_end + 1;
      }
    }
  }

  // extended fibres
  parallel_for(nl * nt, grid.threads, [&](int flat) {
    const int p = flat / nt;
    const int i = flat % nt;
    LineScratch& line = scratch[p];
    const morpho::SymmetryFrameField& field =
        line.fields[line.field_of_node[i]];
    if (!field.has_derivatives) return;
    const Eigen::MatrixXd& frame = field.frames[i - field.first];
    const Eigen::MatrixXd& frame_dt = field.d_t[i - field.first];
    line.morph_x[i] = morpho::morphogenesis_fibre_at_X(
        model, ts[i], line.x, frame, frame_dt, samples, grid.rel_tol);
    if (grid.full_body && line.frame_dx1[i].has_value()) {
      const std::array<Eigen::MatrixXd, 3> frame_dx = {
          *line.frame_dx1[i], Eigen::MatrixXd::Zero(9, frame.cols()),
          Eigen::MatrixXd::Zero(9, frame.cols())};
      line.morph_full[i] = morpho::morphogenesis_fibre(
          model, ts[i], line.x, frame, frame_dt, frame_dx, samples,
          grid.rel_tol);
    }
  });

  // assemble the report
  ClassificationReport rep;
  rep.model_name = model.name;
  rep.model_text = model.text;
  rep.components = model.component_count();
  rep.grid = grid;

  bool evo_full_const = true;
  int evo_full_ref = scratch[0].evo_full[0].dim;
  bool aging_node = false;
  bool extended_one = true;
  bool extended_all = true;

  for (int p = 0; p < nl; ++p) {
    LineScratch& line = scratch[p];
    LineResult lr;
    lr.x = line.x;
    lr.segments = line.profile.segments;
    lr.jump_nodes = line.profile.jump_nodes;

    std::vector<int> base_dims(nt);
    for (int i = 0; i < nt; ++i) {
      NodeRecord node;
      node.t = ts[i];
      node.x = line.x;
      node.sym_dim = line.algebras[i].dim;
      node.evo_dim = line.evo_x[i].dim;
      node.evo_base_dim = line.evo_x[i].base_dim;
      base_dims[i] = node.evo_base_dim;

      std::vector<std::string> flags;
      if (std::find(lr.jump_nodes.begin(), lr.jump_nodes.end(), i) !=
          lr.jump_nodes.end())
        flags.push_back("jump");
      const morpho::SymmetryFrameField& field =
          line.fields[line.field_of_node[i]];
      if (field.dim > 0 && !field.has_derivatives)
        flags.push_back("short-segment");
      if (line.morph_x[i].has_value()) {
        node.morph_dim = line.morph_x[i]->dim;
        node.morph_base_dim = line.morph_x[i]->base_dim;
        if (node.morph_base_dim != 1) extended_one = false;
      } else {
        extended_all = false;
      }
      if (grid.full_body && !line.morph_full[i].has_value() &&
          line.morph_x[i].has_value())
        flags.push_back("no-x-derivative");
      node.flags = join_flags(flags);
      lr.nodes.push_back(std::move(node));

      FullNodeRecord full;
      full.t = ts[i];
      full.x = line.x;
      full.evo_dim = line.evo_full[i].dim;
      full.evo_base_dim = line.evo_full[i].base_dim;
      if (line.morph_full[i].has_value()) {
        full.morph_dim = line.morph_full[i]->dim;
        full.morph_base_dim = line.morph_full[i]->base_dim;
      }
      full.flags = lr.nodes.back().flags;
      rep.full_nodes.push_back(std::move(full));

      if (line.evo_full[i].dim != evo_full_ref) evo_full_const = false;
      if (line.evo_x[i].base_dim == 0) aging_node = true;
    }

    lr.evolution_verdict = evolution::classify_evolution(base_dims);
    lr.morpho_verdict =
        morpho::classify_morphogenesis(line.profile, line.morph_x);
    rep.lines.push_back(std::move(lr));
  }

  rep.conditions.evolution_fibre_dim_constant = evo_full_const;
  rep.conditions.aging_node_present = aging_node;
  rep.conditions.extended_base_dim_one_everywhere = extended_one && extended_all;
  rep.conditions.extended_fibres_all_computed = extended_all;

  // a body verdict holds when every particle line agrees
  bool all_remodeling = true, all_aging = true;
  bool any_morph = false, any_undet = false;
  for (const LineResult& lr : rep.lines) {
    if (lr.evolution_verdict != evolution::Verdict::SmoothRemodeling)
      all_remodeling = false;
    if (lr.evolution_verdict != evolution::Verdict::SmoothAging)
      all_aging = false;
    if (lr.morpho_verdict == morpho::Verdict::Morphogenesis) any_morph = true;
    if (lr.morpho_verdict == morpho::Verdict::Undetermined) any_undet = true;
  }
  rep.evolution_verdict = all_remodeling
                              ? evolution::Verdict::SmoothRemodeling
                              : (all_aging ? evolution::Verdict::SmoothAging
                                           : evolution::Verdict::Mixed);
  rep.morpho_verdict = any_morph ? morpho::Verdict::Morphogenesis
                                 : (any_undet ? morpho::Verdict::Undetermined
                                              : morpho::Verdict::NoMorphogenesis);
  return rep;
}

SymmetryTable symmetry_table(const dsl::ResponseModel& model,
                             const GridSpec& grid) {
  grid.validate();
  const std::vector<double> ts = grid.t_nodes();
  const std::vector<double> x1s = grid.x1_nodes();
  const int nt = static_cast<int>(ts.size());
  const int nl = static_cast<int>(x1s.size());
  const std::vector<Eigen::Matrix3d> samples =
      dsl::sample_deformations(grid.seed, grid.samples, grid.det_floor);

  SymmetryTable table;
  table.model_name = model.name;
  table.model_text = model.text;
  table.grid = grid;
  table.rows.resize(static_cast<std::size_t>(nl) * nt);
  parallel_for(nl * nt, grid.threads, [&](int flat) {
    const int p = flat / nt;
    const int i = flat % nt;
    const Eigen::Vector3d x(x1s[p], grid.x_fixed(1), grid.x_fixed(2));
    const symmetry::SymmetryAlgebra alg =
        symmetry::symmetry_algebra(model, ts[i], x, samples, grid.rel_tol);
    SymmetryTable::Row& row = table.rows[flat];
    row.t = ts[i];
    row.x = x;
    row.dim = alg.dim;
    row.basis = alg.basis.basis;
  });
  return table;
}

}  // namespace matevo::report
