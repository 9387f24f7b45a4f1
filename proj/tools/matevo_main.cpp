// matevo: material evolution analysis from a constitutive response W(t, X, F).
//
//   matevo analyze   --scenario B --t-min -1 --t-max 1 --t-steps 41 \
//                    --x 0,0,0 --seed 42 --out b.json
//   matevo symmetry  --scenario A --format csv --out a.csv
//   matevo groupoid check data/s3_counterexample.groupoid.json
//   matevo groupoid normalizoid G.json H.json --out N.json
//
// Exit codes: 0 success, 2 model/configuration/file error, 3 numerical
// failure (for `groupoid check`, 1 flags axiom violations).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matevo/analysis.hpp"
#include "matevo/groupoid.hpp"
#include "matevo/groupoid_io.hpp"
#include "matevo/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct ModelOptions {
  std::string scenario;
  std::string model_file;
};

struct GridOptions {
  double t_min = -1.0;
  double t_max = 1.0;
  int t_steps = 41;
  std::string x_fixed = "0,0,0";
  std::string x1_range;
  int samples = 40;
  double rel_tol = 1e-8;
  std::uint64_t seed = 42;
  double det_floor = 0.2;
  int threads = 1;
};

struct OutputOptions {
  std::string out_path;
  std::string format = "json";
};

void add_model_options(CLI::App* cmd, ModelOptions& opt) {
  auto* scenario = cmd->add_option("--scenario", opt.scenario,
                                   "built-in scenario name (A..E)");
  auto* model =
      cmd->add_option("--model", opt.model_file, "constitutive model file");
  scenario->excludes(model);
  model->excludes(scenario);
}

void add_grid_options(CLI::App* cmd, GridOptions& opt) {
  cmd->add_option("--t-min", opt.t_min, "grid start time");
  cmd->add_option("--t-max", opt.t_max, "grid end time");
  cmd->add_option("--t-steps", opt.t_steps, "number of time nodes");
  auto* x = cmd->add_option("--x", opt.x_fixed, "fixed body point a,b,c");
  auto* range = cmd->add_option("--x1-range", opt.x1_range,
                                "body line lo,hi,n (x2 = x3 = 0)");
  x->excludes(range);
  range->excludes(x);
  cmd->add_option("--samples", opt.samples, "deformation samples per node");
  cmd->add_option("--tol", opt.rel_tol, "relative rank threshold");
  cmd->add_option("--seed", opt.seed, "sampling seed");
  cmd->add_option("--det-floor", opt.det_floor, "minimum |det F| accepted");
  cmd->add_option("--threads", opt.threads, "worker threads (same output)");
}

void add_output_options(CLI::App* cmd, OutputOptions& opt) {
  cmd->add_option("--out", opt.out_path, "output file (default stdout)");
  cmd->add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

matevo::dsl::ResponseModel load_model(const ModelOptions& opt) {
  if (!opt.scenario.empty())
    return matevo::dsl::builtin_scenario(opt.scenario);
  if (opt.model_file.empty())
    throw matevo::ConfigError("one of --scenario or --model is required");
  std::ifstream in(opt.model_file);
  if (!in)
    throw matevo::FormatError("cannot open model file '" + opt.model_file +
                              "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  matevo::dsl::ResponseModel model =
      matevo::dsl::parse_response(buffer.str());
  model.name = opt.model_file;
  return model;
}

matevo::report::GridSpec make_grid(const GridOptions& opt) {
  matevo::report::GridSpec grid;
  grid.t_min = opt.t_min;
  grid.t_max = opt.t_max;
  grid.t_steps = opt.t_steps;
  grid.samples = opt.samples;
  grid.rel_tol = opt.rel_tol;
  grid.seed = opt.seed;
  grid.det_floor = opt.det_floor;
  grid.threads = opt.threads;

  auto parse_csv = [](const std::string& text, std::size_t n,
                      const char* what) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        vals.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw matevo::ConfigError(std::string("cannot parse ") + what + " '" +
                                  text + "'");
      }
    }
    if (vals.size() != n)
      throw matevo::ConfigError(std::string(what) + " needs " +
                                std::to_string(n) + " comma-separated values");
    return vals;
  };

  if (!opt.x1_range.empty()) {
    const std::vector<double> vals = parse_csv(opt.x1_range, 3, "--x1-range");
    grid.full_body = true;
    grid.x1_min = vals[0];
    grid.x1_max = vals[1];
    grid.x1_steps = static_cast<int>(vals[2]);
    grid.x_fixed = Eigen::Vector3d::Zero();
  } else {
    const std::vector<double> vals = parse_csv(opt.x_fixed, 3, "--x");
    grid.x_fixed = Eigen::Vector3d(vals[0], vals[1], vals[2]);
  }
  return grid;
}

void emit(const OutputOptions& opt, const std::string& content) {
  if (opt.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out)
    throw matevo::FormatError("cannot write '" + opt.out_path + "'");
  out << content;
}

// Canonical invocation string for provenance: only the flags that affect
// the computed numbers, so identical analyses emit identical reports no
// matter where they are written or how many threads ran.
std::string canonical_invocation(const ModelOptions& model,
                                 const GridOptions& grid) {
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  std::string out = "analyze";
  if (!model.scenario.empty()) out += " --scenario " + model.scenario;
  if (!model.model_file.empty()) out += " --model " + model.model_file;
  out += " --t-min " + num(grid.t_min) + " --t-max " + num(grid.t_max) +
         " --t-steps " + std::to_string(grid.t_steps);
  if (grid.x1_range.empty())
    out += " --x " + grid.x_fixed;
  else
    out += " --x1-range " + grid.x1_range;
  out += " --samples " + std::to_string(grid.samples) + " --tol " +
         num(grid.rel_tol) + " --seed " + std::to_string(grid.seed) +
         " --det-floor " + num(grid.det_floor);
  return out;
}

int run_analyze(const ModelOptions& model_opt, const GridOptions& grid_opt,
                const OutputOptions& out_opt, const std::string& invocation) {
  const matevo::dsl::ResponseModel model = load_model(model_opt);
  const matevo::report::GridSpec grid = make_grid(grid_opt);
  matevo::report::ClassificationReport rep = matevo::report::analyze(model, grid);
  rep.invocation = invocation;
  emit(out_opt, out_opt.format == "csv" ? matevo::report::to_csv(rep)
                                        : matevo::report::to_json(rep));
  std::cerr << "evolution: " << matevo::evolution::to_string(rep.evolution_verdict)
            << ", morphogenesis: " << matevo::morpho::to_string(rep.morpho_verdict)
            << "\n";
  return kExitOk;
}

int run_symmetry(const ModelOptions& model_opt, const GridOptions& grid_opt,
                 const OutputOptions& out_opt) {
  const matevo::dsl::ResponseModel model = load_model(model_opt);
  const matevo::report::GridSpec grid = make_grid(grid_opt);
  const matevo::report::SymmetryTable table =
      matevo::report::symmetry_table(model, grid);
  emit(out_opt, out_opt.format == "csv" ? matevo::report::to_csv(table)
                                        : matevo::report::to_json(table));
  return kExitOk;
}

int run_groupoid_check(const std::string& path) {
  namespace grp = matevo::groupoid;
  const grp::FiniteGroupoid g = grp::load_groupoid(path);
  const grp::ValidationResult result = grp::validate_groupoid(g);
  std::printf("objects: %d, arrows: %d\n", g.object_count(), g.arrow_count());
  if (result.ok()) {
    std::printf("ok: all groupoid axioms hold\n");
    return kExitOk;
  }
  for (const grp::Violation& v : result.violations)
    std::printf("violation [%s]: %s\n", v.family.c_str(), v.detail.c_str());
  return kExitInvalid;
}

int run_groupoid_normal(const std::string& gpath, const std::string& hpath) {
  namespace grp = matevo::groupoid;
  const grp::FiniteGroupoid g = grp::load_groupoid(gpath);
  const grp::FiniteSubgroupoid h = grp::load_subgroupoid(g, hpath);
  const grp::ValidationResult sub_ok = grp::validate_subgroupoid(g, h);
  if (!sub_ok.ok()) {
    for (const grp::Violation& v : sub_ok.violations)
      std::printf("invalid subgroupoid [%s]: %s\n", v.family.c_str(),
                  v.detail.c_str());
    return kExitUsage;
  }
  grp::ConjugationWitness witness;
  const bool normal = grp::is_normal_subgroupoid(g, h, &witness);
  if (normal) {
    std::printf("normal: true\n");
  } else {
    std::printf("normal: false\n");
    std::printf("witness: g = %s, h = %s, g*h*g^-1 = %s\n",
                g.arrow_name(witness.g).c_str(),
                g.arrow_name(witness.h).c_str(),
                witness.conjugate == grp::kUndefined
                    ? "<undefined>"
                    : g.arrow_name(witness.conjugate).c_str());
  }
  return kExitOk;
}

int run_groupoid_normalizoid(const std::string& gpath,
                             const std::string& hpath,
                             const std::string& out_path) {
  namespace grp = matevo::groupoid;
  const grp::FiniteGroupoid g = grp::load_groupoid(gpath);
  const grp::FiniteSubgroupoid h = grp::load_subgroupoid(g, hpath);
  const grp::ValidationResult sub_ok = grp::validate_subgroupoid(g, h);
  if (!sub_ok.ok()) {
    for (const grp::Violation& v : sub_ok.violations)
      std::printf("invalid subgroupoid [%s]: %s\n", v.family.c_str(),
                  v.detail.c_str());
    return kExitUsage;
  }
  const grp::FiniteSubgroupoid n = grp::normalizoid(g, h);
  const grp::ExtractedGroupoid extracted = grp::extract_groupoid(g, n);
  std::printf("normalizoid arrows: %zu\n", n.arrows.size());
  std::printf("transitive: %s\n",
              grp::is_transitive(extracted.groupoid) ? "true" : "false");
  if (!out_path.empty()) {
    grp::save_subgroupoid(g, n, out_path);
    std::printf("written: %s\n", out_path.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"material evolution analysis toolkit"};
  app.set_version_flag("--version", std::string(matevo::kToolVersion));
  app.require_subcommand(1);

  ModelOptions model_opt;
  GridOptions grid_opt;
  OutputOptions out_opt;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full pipeline: symmetry, evolution, morphogenesis");
  add_model_options(analyze, model_opt);
  add_grid_options(analyze, grid_opt);
  add_output_options(analyze, out_opt);

  CLI::App* symmetry =
      app.add_subcommand("symmetry", "per-node symmetry algebra table");
  add_model_options(symmetry, model_opt);
  add_grid_options(symmetry, grid_opt);
  add_output_options(symmetry, out_opt);

  CLI::App* groupoid =
      app.add_subcommand("groupoid", "exact finite-groupoid algebra");
  groupoid->require_subcommand(1);
  std::string gpath, hpath, npath;
  CLI::App* check = groupoid->add_subcommand("check", "verify the axioms");
  check->add_option("file", gpath, "groupoid JSON file")->required();
  CLI::App* normal =
      groupoid->add_subcommand("normal", "test normality of a subgroupoid");
  normal->add_option("file", gpath, "groupoid JSON file")->required();
  normal->add_option("subfile", hpath, "subgroupoid JSON file")->required();
  CLI::App* normalizoid = groupoid->add_subcommand(
      "normalizoid", "largest subgroupoid in which the given one is normal");
  normalizoid->add_option("file", gpath, "groupoid JSON file")->required();
  normalizoid->add_option("subfile", hpath, "subgroupoid JSON file")
      ->required();
  normalizoid->add_option("--out", npath, "write the result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed())
      return run_analyze(model_opt, grid_opt, out_opt,
                         canonical_invocation(model_opt, grid_opt));
    if (symmetry->parsed()) return run_symmetry(model_opt, grid_opt, out_opt);
    if (check->parsed()) return run_groupoid_check(gpath);
    if (normal->parsed()) return run_groupoid_normal(gpath, hpath);
    if (normalizoid->parsed())
      return run_groupoid_normalizoid(gpath, hpath, npath);
  } catch (const matevo::NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const matevo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
