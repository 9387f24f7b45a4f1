// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matevo/analysis.hpp"
#include "matevo/dsl.hpp"
#include "matevo/evolution.hpp"
#include "matevo/groupoid.hpp"
#include "matevo/morphogenesis.hpp"
#include "matevo/numkernel.hpp"
#include "matevo/symmetry.hpp"
#include "oracle_helpers.hpp"

using namespace matevo;
using Eigen::MatrixXd;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

constexpr double kTol = 1e-8;

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += message;
  }
  void expect(bool condition, const std::string& message) {
    if (!condition) fail(message);
  }
};

const std::vector<Eigen::Matrix3d>& samples() {
  static const auto s = dsl::sample_deformations(42, 40, 0.2);
  return s;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> ts(n);
  for (int k = 0; k < n; ++k) ts[k] = ((n - 1 - k) * lo + k * hi) / (n - 1);
  return ts;
}

struct PreparedLine {
  symmetry::ProfileResult profile;
  std::vector<morpho::SymmetryFrameField> fields;
  std::vector<std::optional<morpho::MorphogenesisFibre>> morph;
  std::vector<evolution::XEvolutionFibre> evo;
};

PreparedLine prepare_line(const dsl::ResponseModel& model, double lo,
                          double hi, int n, const Vector3d& x) {
  PreparedLine out;
  const std::vector<double> ts = linspace(lo, hi, n);
  out.profile = symmetry::dimension_profile(model, ts, x, samples(), kTol);
  out.fields = morpho::symmetry_frame_field(out.profile.algebras,
                                            out.profile.profile,
                                            (hi - lo) / (n - 1));
  out.morph.resize(ts.size());
  out.evo.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    out.evo.push_back(evolution::evolution_fibre_at_X(model, ts[i], x,
                                                      samples(), kTol));
  for (const morpho::SymmetryFrameField& field : out.fields) {
    if (!field.has_derivatives) continue;
    for (int i = field.first; i <= field.last; ++i)
      out.morph[i] = morpho::morphogenesis_fibre_at_X(
          model, ts[i], x, field.frames[i - field.first],
          field.d_t[i - field.first], samples(), kTol);
  }
  return out;
}

// --------------------------------------------------------------------------
// criteria
// --------------------------------------------------------------------------

Check criterion_symmetry_oracles() {
  Check c;
  using clock = std::chrono::steady_clock;
  auto timed = [&c](const char* label, const std::function<void()>& body) {
    const auto start = clock::now();
    body();
    const double secs =
        std::chrono::duration<double>(clock::now() - start).count();
    if (secs >= 1.0)
      c.fail(std::string(label) + " took " + std::to_string(secs) + "s");
  };

  timed("tr(F'F)", [&] {
    const auto alg = symmetry::symmetry_algebra(
        dsl::parse_response("tr(matmul(transpose(F),F))"), 0.0,
        Vector3d::Zero(), samples(), kTol);
    c.expect(alg.dim == 3, "tr(F'F) dim != 3");
    if (alg.dim == 3)
      c.expect(oracle::max_principal_angle(alg.basis.basis,
                                           oracle::skew_span()) < 1e-6,
               "tr(F'F) span is not the skew matrices");
  });

  timed("det F", [&] {
    const auto alg =
        symmetry::symmetry_algebra(dsl::parse_response("det(F)"), 0.0,
                                   Vector3d::Zero(), samples(), kTol);
    c.expect(alg.dim == 8, "det F dim != 8");
    if (alg.dim == 8)
      c.expect(oracle::max_principal_angle(alg.basis.basis,
                                           oracle::tracefree_span()) < 1e-6,
               "det F span is not the trace-free matrices");
  });

  timed("scenario A", [&] {
    c.expect(symmetry::symmetry_algebra(dsl::builtin_scenario("A"), 0.0,
                                        Vector3d::Zero(), samples(), kTol)
                     .dim == 0,
             "scenario A dim != 0");
  });

  timed("scenario C", [&] {
    const dsl::ResponseModel m = dsl::builtin_scenario("C");
    c.expect(symmetry::symmetry_algebra(m, 0.0, Vector3d::Zero(), samples(),
                                        kTol)
                     .dim == 3,
             "scenario C dim at t=0 != 3");
    for (double t : {0.05, -0.05, 0.5, -1.0, 1.0})
      c.expect(symmetry::symmetry_algebra(m, t, Vector3d::Zero(), samples(),
                                          kTol)
                       .dim == 1,
               "scenario C dim at |t|>=0.05 != 1");
  });
  return c;
}

Check criterion_evolution_oracles() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> ts = linspace(-1.0, 1.0, 41);
  const std::vector<double> tols = {1e-10, 1e-8, 1e-6};

  for (double tol : tols) {
    const dsl::ResponseModel d = dsl::builtin_scenario("D");
    const dsl::ResponseModel b = dsl::builtin_scenario("B");
    const dsl::ResponseModel a = dsl::builtin_scenario("A");
    for (double t : ts) {
      const auto fd = evolution::evolution_fibre_at_X(d, t, Vector3d::Zero(),
                                                      samples(), tol);
      c.expect(fd.dim == 4 && fd.base_dim == 1,
               "scenario D fibre != (4, 1) at tol " + std::to_string(tol));
      const auto fb = evolution::evolution_fibre_at_X(b, t, Vector3d::Zero(),
                                                      samples(), tol);
      c.expect(fb.dim == 3 && fb.base_dim == 0,
               "scenario B fibre != (3, 0) at tol " + std::to_string(tol));
      const auto fa = evolution::evolution_fibre_at_X(a, t, Vector3d::Zero(),
                                                      samples(), tol);
      c.expect(fa.base_dim == 1, "scenario A base_dim != 1");
      if (!c.ok) break;
    }
    const auto fe = evolution::evolution_fibre(dsl::builtin_scenario("E"), 0.0,
                                               Vector3d(0.3, 0.0, 0.0),
                                               samples(), tol);
    c.expect(fe.dim == 7 && fe.base_dim == 4,
             "scenario E full fibre != (7, 4) at tol " + std::to_string(tol));
    if (!c.ok) break;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  // three scenarios x three tolerances over a 41-node grid; budget 5 s per
  // grid pass
  if (secs >= 45.0) c.fail("runtime " + std::to_string(secs) + "s");
  return c;
}

Check criterion_morphogenesis_oracles() {
  Check c;
  const auto start = std::chrono::steady_clock::now();

  const PreparedLine b = prepare_line(dsl::builtin_scenario("B"), -1.0, 1.0,
                                      41, Vector3d::Zero());
  for (std::size_t i = 0; i < b.morph.size(); ++i) {
    if (!b.morph[i].has_value()) {
      c.fail("scenario B node without extended fibre");
      break;
    }
    c.expect(b.morph[i]->dim == 5, "scenario B extended dim != 5");
    c.expect(b.morph[i]->base_dim == 1, "scenario B extended base != 1");
    const MatrixXd theta =
        num::orthonormal_span(b.morph[i]->basis.basis.bottomRows(9), 1e-9);
    c.expect(theta.cols() == 4 &&
                 oracle::max_principal_angle(theta,
                                             oracle::so3_plus_scaling_span()) <
                     1e-5,
             "scenario B Th block is not so(3) + R*I");
    if (!c.ok) break;
  }
  c.expect(morpho::classify_morphogenesis(b.profile.profile, b.morph) ==
               morpho::Verdict::NoMorphogenesis,
           "scenario B verdict != no-morphogenesis");

  const PreparedLine cs = prepare_line(dsl::builtin_scenario("C"), -1.0, 1.0,
                                       41, Vector3d::Zero());
  c.expect(morpho::classify_morphogenesis(cs.profile.profile, cs.morph) ==
               morpho::Verdict::Morphogenesis,
           "scenario C verdict != morphogenesis");
  bool jump_at_zero = false;
  for (int node : cs.profile.profile.jump_nodes)
    if (cs.profile.profile.t_nodes[node] == 0.0) jump_at_zero = true;
  c.expect(jump_at_zero, "scenario C jump at t = 0 not reported");

  const PreparedLine d = prepare_line(dsl::builtin_scenario("D"), -1.0, 1.0,
                                      41, Vector3d::Zero());
  c.expect(morpho::classify_morphogenesis(d.profile.profile, d.morph) ==
               morpho::Verdict::NoMorphogenesis,
           "scenario D verdict != no-morphogenesis");

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (secs >= 30.0) c.fail("runtime " + std::to_string(secs) + "s");
  return c;
}

Check criterion_inclusion() {
  Check c;
  for (const std::string name : {"A", "B", "C", "D", "E"}) {
    const dsl::ResponseModel model = dsl::builtin_scenario(name);
    const PreparedLine line =
        prepare_line(model, -1.0, 1.0, 41, Vector3d(0.3, 0.0, 0.0));
    int checked = 0;
    for (std::size_t i = 0; i < line.morph.size(); ++i) {
      if (!line.morph[i].has_value()) continue;
      for (int v = 0; v < line.evo[i].dim; ++v) {
        const double residual = num::projection_residual(
            line.morph[i]->basis.basis, line.evo[i].basis.basis.col(v));
        if (residual > 1e-6) {
          c.fail("scenario " + name + " node " + std::to_string(i) +
                 " residual " + std::to_string(residual));
          break;
        }
        ++checked;
      }
      if (!c.ok) break;
    }
    c.expect(checked > 0, "scenario " + name + " had nothing to check");
    if (!c.ok) break;
  }
  return c;
}

Check criterion_bracket_closure() {
  Check c;
  int closed_checked = 0;
  for (const std::string name : {"A", "B", "C", "D", "E"}) {
    const dsl::ResponseModel model = dsl::builtin_scenario(name);
    for (double t : linspace(-1.0, 1.0, 41)) {
      const auto alg = symmetry::symmetry_algebra(
          model, t, Vector3d(0.3, 0.0, 0.0), samples(), kTol);
      if (alg.dim < 2) continue;
      ++closed_checked;
      for (int a = 0; a < alg.dim && c.ok; ++a)
        for (int b = a + 1; b < alg.dim && c.ok; ++b) {
          const Eigen::Matrix3d la = oracle::unflatten(alg.basis.basis.col(a));
          const Eigen::Matrix3d lb = oracle::unflatten(alg.basis.basis.col(b));
          const double residual = num::projection_residual(
              alg.basis.basis, oracle::flatten(la * lb - lb * la));
          c.expect(residual <= 1e-6,
                   "scenario " + name + " bracket residual " +
                       std::to_string(residual) + " at t " + std::to_string(t));
        }
    }
  }
  c.expect(closed_checked >= 100, "only " + std::to_string(closed_checked) +
                                      " algebras with dim >= 2");
  c.detail = std::to_string(closed_checked) + " algebras";
  return c;
}

Check criterion_groupoid_bruteforce() {
  namespace grp = groupoid;
  Check c;
  const auto start = std::chrono::steady_clock::now();

  int normal_count = 0;
  for (std::uint64_t seed = 0; seed < 200 && c.ok; ++seed) {
    const grp::RandomPair pair = grp::random_transitive_pair(seed);
    const bool normal = grp::is_normal_subgroupoid(pair.groupoid, pair.sub);
    const bool iso_normal = grp::all_isotropy_normal(pair.groupoid, pair.sub);
    if (normal != iso_normal) {
      c.fail("criterion mismatch at seed " + std::to_string(seed) + " (" +
             pair.description + ")");
      break;
    }
    if (normal) ++normal_count;

    const grp::FiniteSubgroupoid n = grp::normalizoid(pair.groupoid, pair.sub);
    for (grp::ObjectId x = 0; x < pair.groupoid.object_count(); ++x) {
      if (grp::sub_isotropy(pair.groupoid, n, x) !=
          grp::isotropy_normalizer(pair.groupoid, pair.sub, x)) {
        c.fail("normalizoid isotropy != normalizer at seed " +
               std::to_string(seed));
        break;
      }
    }
  }
  c.expect(normal_count > 0 && normal_count < 200,
           "generator produced only one outcome");

  const grp::RandomPair cx = grp::s3_counterexample();
  c.expect(!grp::is_normal_subgroupoid(cx.groupoid, cx.sub),
           "counterexample reported normal");
  const grp::FiniteSubgroupoid n = grp::normalizoid(cx.groupoid, cx.sub);
  c.expect(n.arrows.size() == 12, "counterexample normalizoid != 12 arrows");
  const grp::ExtractedGroupoid ng = grp::extract_groupoid(cx.groupoid, n);
  c.expect(!grp::is_transitive(ng.groupoid),
           "counterexample normalizoid is transitive");

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (secs >= 30.0) c.fail("runtime " + std::to_string(secs) + "s");
  c.detail = "200 pairs, " + std::to_string(normal_count) + " normal, " +
             std::to_string(secs).substr(0, 4) + "s";
  return c;
}

Check criterion_differentiation() {
  Check c;
  const auto points = oracle::random_points(2024, 100);
  for (const std::string name : {"A", "B", "C", "D", "E"}) {
    const dsl::ResponseModel model = dsl::builtin_scenario(name);
    for (const dsl::EvalPoint& p : points) {
      const dsl::ResponseJet got = dsl::eval_with_jet(model, p);
      const dsl::ResponseJet want = oracle::fd_jet(model, p, 1e-5);
      for (int comp = 0; comp < model.component_count() && c.ok; ++comp) {
        c.expect(oracle::rel_error(got.d_t(comp), want.d_t(comp)) <= 1e-5,
                 "scenario " + name + " d_t mismatch");
        for (int i = 0; i < 3; ++i)
          c.expect(
              oracle::rel_error(got.d_x(comp, i), want.d_x(comp, i)) <= 1e-5,
              "scenario " + name + " d_x mismatch");
        for (int i = 0; i < 9; ++i)
          c.expect(
              oracle::rel_error(got.d_F(comp, i), want.d_F(comp, i)) <= 1e-5,
              "scenario " + name + " d_F mismatch");
      }
      if (!c.ok) break;
    }
    if (!c.ok) break;
  }
  return c;
}

Check criterion_determinism() {
  Check c;
  report::GridSpec grid;
  grid.t_steps = 21;
  grid.samples = 40;

  const dsl::ResponseModel model = dsl::builtin_scenario("C");
  const std::string first = report::to_json(report::analyze(model, grid));
  const std::string second = report::to_json(report::analyze(model, grid));
  c.expect(first == second, "reports differ between identical runs");
  report::GridSpec threaded = grid;
  threaded.threads = 4;
  c.expect(first == report::to_json(report::analyze(model, threaded)),
           "reports differ across parallelism levels");

  // integer dims survive doubling K with a new seed and scaling W by 1e3
  auto dim_tuples = [](const report::ClassificationReport& rep) {
    std::vector<int> out;
    for (const auto& line : rep.lines)
      for (const auto& node : line.nodes) {
        out.push_back(node.sym_dim);
        out.push_back(node.evo_dim);
        out.push_back(node.evo_base_dim);
        out.push_back(node.morph_dim);
        out.push_back(node.morph_base_dim);
      }
    for (const auto& node : rep.full_nodes) {
      out.push_back(node.evo_dim);
      out.push_back(node.evo_base_dim);
      out.push_back(node.morph_dim);
      out.push_back(node.morph_base_dim);
    }
    return out;
  };

  for (const std::string name : {"A", "B", "C", "D", "E"}) {
    const dsl::ResponseModel m = dsl::builtin_scenario(name);
    const auto reference = dim_tuples(report::analyze(m, grid));

    report::GridSpec resampled = grid;
    resampled.samples = 80;
    resampled.seed = 7;
    c.expect(dim_tuples(report::analyze(m, resampled)) == reference,
             "scenario " + name + " dims changed under K -> 2K resampling");

    c.expect(dim_tuples(report::analyze(dsl::scale_model(m, 1000.0), grid)) ==
                 reference,
             "scenario " + name + " dims changed under W -> 1000 W");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "symmetry-algebra oracles", criterion_symmetry_oracles},
      {2, "evolution-equation oracles", criterion_evolution_oracles},
      {3, "morphogenesis-equation oracles", criterion_morphogenesis_oracles},
      {4, "distribution inclusion", criterion_inclusion},
      {5, "bracket closure", criterion_bracket_closure},
      {6, "groupoid algebra brute force", criterion_groupoid_bruteforce},
      {7, "differentiation correctness", criterion_differentiation},
      {8, "determinism and stability", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n",
                result.ok ? "PASS" : "FAIL", criterion.id, criterion.title,
                secs, result.detail.empty() ? "" : " - ",
                result.detail.c_str());
    if (!result.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
