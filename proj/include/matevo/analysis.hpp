#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matevo/dsl.hpp"
#include "matevo/evolution.hpp"
#include "matevo/morphogenesis.hpp"
#include "matevo/symmetry.hpp"

namespace matevo::report {

/// Analysis grid and sampling configuration. Time is always gridded; the
/// body is either a fixed point or a line of x1 values (x2, x3 stay fixed:
/// the scenario gallery varies along one body axis only).
struct GridSpec {
  double t_min = -1.0;
  double t_max = 1.0;
  int t_steps = 41;
  Eigen::Vector3d x_fixed = Eigen::Vector3d::Zero();
  bool full_body = false;
  double x1_min = 0.0;
  double x1_max = 0.0;
  int x1_steps = 1;
  std::uint64_t seed = 42;
  int samples = 40;
  double rel_tol = 1e-8;
  double det_floor = 0.2;
  int threads = 1;  // execution detail; never serialized

  void validate() const;  // throws ConfigError
  std::vector<double> t_nodes() const;
  std::vector<double> x1_nodes() const;
  double t_step() const;
  double x1_step() const;
};

struct NodeRecord {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  int sym_dim = 0;
  int evo_dim = 0;       // particle evolution fibre (10 unknowns)
  int evo_base_dim = 0;  // 0 or 1
  int morph_dim = -1;    // particle extended fibre; -1 when not computed
  int morph_base_dim = -1;
  std::string flags;  // ';'-joined tokens: jump, short-segment, ...
};

/// Full-system quantities (13 unknowns); morphogenesis entries are only
/// available on body-line grids, -1 otherwise.
struct FullNodeRecord {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  int evo_dim = 0;
  int evo_base_dim = 0;
  int morph_dim = -1;
  int morph_base_dim = -1;
  std::string flags;
};

/// Results for one particle line (fixed x) over the time grid.
struct LineResult {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  std::vector<NodeRecord> nodes;
  std::vector<symmetry::Segment> segments;
  std::vector<int> jump_nodes;
  evolution::Verdict evolution_verdict = evolution::Verdict::Mixed;
  morpho::Verdict morpho_verdict = morpho::Verdict::Undetermined;
};

struct Conditions {
  bool evolution_fibre_dim_constant = false;  // over all nodes, 13-unknown dim
  bool aging_node_present = false;            // some node with evo_base_dim 0
  bool extended_base_dim_one_everywhere = false;
  bool extended_fibres_all_computed = false;
};

struct ClassificationReport {
  std::string model_name;
  std::string model_text;
  int components = 0;
  GridSpec grid;
  std::vector<LineResult> lines;
  std::vector<FullNodeRecord> full_nodes;  // line-major, t-minor
  Conditions conditions;
  evolution::Verdict evolution_verdict = evolution::Verdict::Mixed;
  morpho::Verdict morpho_verdict = morpho::Verdict::Undetermined;
  std::string invocation;  // CLI provenance, empty for library runs
};

/// Run the whole pipeline: symmetry profile, evolution fibres, frame
/// fields, extended fibres, classification. Deterministic for a fixed
/// (model, grid) including the thread count.
ClassificationReport analyze(const dsl::ResponseModel& model,
                             const GridSpec& grid);

/// Standalone symmetry sweep (the `symmetry` subcommand).
struct SymmetryTable {
  std::string model_name;
  std::string model_text;
  GridSpec grid;
  struct Row {
    double t = 0.0;
    Eigen::Vector3d x = Eigen::Vector3d::Zero();
    int dim = 0;
    Eigen::MatrixXd basis;  // 9 x dim
  };
  std::vector<Row> rows;
};

SymmetryTable symmetry_table(const dsl::ResponseModel& model,
                             const GridSpec& grid);

// Serialization (report_io.cpp). Numbers round-trip at full precision; the
// emitted bytes depend only on the report contents.
std::string to_json(const ClassificationReport& report);
std::string to_csv(const ClassificationReport& report);
std::string to_json(const SymmetryTable& table);
std::string to_csv(const SymmetryTable& table);

}  // namespace matevo::report
