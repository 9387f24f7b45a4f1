#include <cstdio>

#include "json.hpp"
#include "matevo/analysis.hpp"
#include "matevo/version.hpp"

namespace matevo::report {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json grid_json(const GridSpec& grid) {
  // threads are an execution detail, not provenance; reports must be
  // byte-identical across parallelism levels
  ordered_json j;
  j["t_min"] = grid.t_min;
  j["t_max"] = grid.t_max;
  j["t_steps"] = grid.t_steps;
  j["x_fixed"] = {grid.x_fixed(0), grid.x_fixed(1), grid.x_fixed(2)};
  j["full_body"] = grid.full_body;
  if (grid.full_body) {
    j["x1_min"] = grid.x1_min;
    j["x1_max"] = grid.x1_max;
    j["x1_steps"] = grid.x1_steps;
  }
  j["seed"] = grid.seed;
  j["samples"] = grid.samples;
  j["rel_tol"] = grid.rel_tol;
  j["det_floor"] = grid.det_floor;
  return j;
}

ordered_json model_json(const std::string& name, const std::string& text,
                        int components) {
  ordered_json j;
  j["name"] = name;
  j["text"] = text;
  if (components > 0) j["components"] = components;
  return j;
}

ordered_json tool_json() {
  ordered_json j;
  j["name"] = kToolName;
  j["version"] = kToolVersion;
  return j;
}

}  // namespace

std::string to_json(const ClassificationReport& report) {
  ordered_json j;
  j["schema"] = "matevo-report/1";
  j["tool"] = tool_json();
  j["model"] = model_json(report.model_name, report.model_text,
                          report.components);
  j["grid"] = grid_json(report.grid);
  j["verdicts"] = {{"evolution", to_string(report.evolution_verdict)},
                   {"morphogenesis", to_string(report.morpho_verdict)}};
  j["conditions"] = {
      {"evolution_fibre_dim_constant",
       report.conditions.evolution_fibre_dim_constant},
      {"aging_node_present", report.conditions.aging_node_present},
      {"extended_base_dim_one_everywhere",
       report.conditions.extended_base_dim_one_everywhere},
      {"extended_fibres_all_computed",
       report.conditions.extended_fibres_all_computed}};

  j["lines"] = ordered_json::array();
  for (const LineResult& line : report.lines) {
    ordered_json lj;
    lj["x"] = {line.x(0), line.x(1), line.x(2)};
    lj["segments"] = ordered_json::array();
    for (const symmetry::Segment& s : line.segments)
      lj["segments"].push_back(
          {{"first", s.first}, {"last", s.last}, {"dim", s.dim}});
    lj["jump_nodes"] = line.jump_nodes;
    lj["verdicts"] = {{"evolution", to_string(line.evolution_verdict)},
                      {"morphogenesis", to_string(line.morpho_verdict)}};
    lj["nodes"] = ordered_json::array();
    for (const NodeRecord& n : line.nodes) {
      ordered_json nj;
      nj["t"] = n.t;
      nj["x1"] = n.x(0);
      nj["x2"] = n.x(1);
      nj["x3"] = n.x(2);
      nj["sym_dim"] = n.sym_dim;
      nj["evo_dim"] = n.evo_dim;
      nj["evo_base_dim"] = n.evo_base_dim;
      nj["morph_dim"] = n.morph_dim;
      nj["morph_base_dim"] = n.morph_base_dim;
      nj["flags"] = n.flags;
      lj["nodes"].push_back(std::move(nj));
    }
    j["lines"].push_back(std::move(lj));
  }

  j["full_system"] = ordered_json::array();
  for (const FullNodeRecord& n : report.full_nodes) {
    ordered_json nj;
    nj["t"] = n.t;
    nj["x1"] = n.x(0);
    nj["x2"] = n.x(1);
    nj["x3"] = n.x(2);
    nj["evo_dim"] = n.evo_dim;
    nj["evo_base_dim"] = n.evo_base_dim;
    nj["morph_dim"] = n.morph_dim;
    nj["morph_base_dim"] = n.morph_base_dim;
    j["full_system"].push_back(std::move(nj));
  }

  j["provenance"] = {{"invocation", report.invocation}};
  return j.dump(2) + "\n";
}

std::string to_csv(const ClassificationReport& report) {
  std::string out =
      "t,x1,x2,x3,sym_dim,evo_dim,evo_base_dim,morph_dim,morph_base_dim,"
      "flags\n";
  for (const LineResult& line : report.lines) {
    for (const NodeRecord& n : line.nodes) {
      out += fmt(n.t) + "," + fmt(n.x(0)) + "," + fmt(n.x(1)) + "," +
             fmt(n.x(2)) + "," + std::to_string(n.sym_dim) + "," +
             std::to_string(n.evo_dim) + "," + std::to_string(n.evo_base_dim) +
             "," + std::to_string(n.morph_dim) + "," +
             std::to_string(n.morph_base_dim) + "," + n.flags + "\n";
    }
  }
  return out;
}

std::string to_json(const SymmetryTable& table) {
  ordered_json j;
  j["schema"] = "matevo-symmetry/1";
  j["tool"] = tool_json();
  j["model"] = model_json(table.model_name, table.model_text, 0);
  j["grid"] = grid_json(table.grid);
  j["rows"] = ordered_json::array();
  for (const SymmetryTable::Row& row : table.rows) {
    ordered_json rj;
    rj["t"] = row.t;
    rj["x1"] = row.x(0);
    rj["x2"] = row.x(1);
    rj["x3"] = row.x(2);
    rj["sym_dim"] = row.dim;
    // basis vectors column by column, each flattened row-major over (l, j)
    ordered_json basis = ordered_json::array();
    for (int b = 0; b < row.basis.cols(); ++b) {
      ordered_json v = ordered_json::array();
      for (int i = 0; i < 9; ++i) v.push_back(row.basis(i, b));
      basis.push_back(std::move(v));
    }
    rj["basis"] = std::move(basis);
    j["rows"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const SymmetryTable& table) {
  std::string out = "t,x1,x2,x3,sym_dim,basis\n";
  for (const SymmetryTable::Row& row : table.rows) {
    out += fmt(row.t) + "," + fmt(row.x(0)) + "," + fmt(row.x(1)) + "," +
           fmt(row.x(2)) + "," + std::to_string(row.dim) + ",";
    std::string basis;
    for (int b = 0; b < row.basis.cols(); ++b)
      for (int i = 0; i < 9; ++i) {
        if (!basis.empty()) basis += ';';
        basis += fmt(row.basis(i, b));
      }
    out += basis + "\n";
  }
  return out;
}

}  // namespace matevo::report
