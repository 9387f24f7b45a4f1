#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "matevo/errors.hpp"
#include "matevo/jet.hpp"

namespace matevo::dsl {

// ---------------------------------------------------------------------------
// Expression trees
//
// A constitutive response W(t, X, F) is a ';'-separated list of scalar
// expressions over the variables t, x1, x2, x3 and the 3x3 matrix F.
// Grammar (see README for the full EBNF):
//
//   model     = component { ";" component }
//   component = expr                        (must type-check as scalar)
//   expr      = term { ("+"|"-") term }
//   term      = unary { ("*"|"/") unary }
//   unary     = "-" unary | power
//   power     = atom [ "^" unary ]
//   atom      = number | ident | ident "(" [ expr {"," expr} ] ")"
//             | "(" expr ")"
//
// Functions: exp, sin, cos, sqrt, log (scalar -> scalar); tr, det
// (matrix -> scalar); transpose (matrix -> matrix); matmul (matrix, matrix
// -> matrix); quad(v, M) = v'Mv (vector, matrix -> scalar); vec(a, b, c)
// (scalars -> vector); mat(nine scalars, row-major) (scalars -> matrix);
// elem(M, i, j) with literal indices in 1..3 (matrix -> scalar). '#'
// starts a comment running to end of line.
// ---------------------------------------------------------------------------

enum class ValueKind { Scalar, Vector, Matrix };

enum class BinOp { Add, Sub, Mul, Div, Pow };

enum class Builtin {
  Exp,
  Sin,
  Cos,
  Sqrt,
  Log,
  Tr,
  Det,
  Transpose,
  Matmul,
  Quad,
  Vec,
  Mat,
  Elem
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Tag { Number, Var, MatrixVar, Unary, Binary, Call } tag;
  ValueKind kind = ValueKind::Scalar;
  double number = 0.0;   // Tag::Number
  int var_index = -1;    // Tag::Var: 0=t, 1..3=x1..x3
  BinOp op = BinOp::Add; // Tag::Binary
  Builtin builtin = Builtin::Exp;  // Tag::Call
  int elem_row = 0, elem_col = 0;  // Builtin::Elem, 0-based
  std::vector<NodePtr> args;
  std::size_t src_pos = 0;
};

/// Parsed constitutive response: m scalar components over the 13 canonical
/// variables. Immutable after construction.
struct ResponseModel {
  std::string name;
  std::string text;  // canonical source (round-trips through parse)
  std::vector<NodePtr> components;

  int component_count() const { return static_cast<int>(components.size()); }
};

/// Evaluation point (t, X, F) in the reference chart. The second groupoid
/// time coordinate never enters W and is deliberately absent.
struct EvalPoint {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Matrix3d F = Eigen::Matrix3d::Identity();
};

/// Value of W and its exact first derivatives in all 13 scalar arguments.
/// d_F columns are ordered F11, F12, F13, F21, ..., F33.
struct ResponseJet {
  Eigen::VectorXd value;  // m
  Eigen::VectorXd d_t;    // m
  Eigen::MatrixXd d_x;    // m x 3
  Eigen::MatrixXd d_F;    // m x 9

  Eigen::Matrix3d d_F_matrix(int component) const {
    Eigen::Matrix3d g;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) g(r, c) = d_F(component, 3 * r + c);
    return g;
  }
};

/// Parse a model from DSL text. Throws ParseError with position on syntax
/// errors, unknown identifiers, arity or type mismatches.
ResponseModel parse_response(const std::string& text);

/// Canonical printer; parse_response(print_response(m)) evaluates
/// bit-identically to m.
std::string print_response(const ResponseModel& model);

/// Evaluate value and all 13 partials per component by forward-mode
/// differentiation. Throws EvalError on domain failures and NumericError if
/// any output is non-finite.
ResponseJet eval_with_jet(const ResponseModel& model, const EvalPoint& p);

/// Built-in scenario gallery (names "A".."E"):
///   A: the nine entries of F                     (m = 9)
///   B: tr(F'F); t*det(F)                         (m = 2)
///   C: tr(F'F); t*(F'F)_33                       (m = 2)
///   D: exp(2t)*tr(F'F)                           (m = 1)
///   E: (1 + x1^2)*tr(F'F)                        (m = 1)
/// Throws ConfigError for unknown names.
ResponseModel builtin_scenario(const std::string& name);

/// Multiply every component of a model by a constant (used by scale
/// invariance checks).
ResponseModel scale_model(const ResponseModel& model, double factor);

/// Draw K deformation gradients F = I + U, U entries uniform in
/// [-0.5, 0.5] from a seeded generator, rejecting |det F| < det_floor.
/// Bounded rejection; candidates that keep failing are contracted toward
/// the identity. Identical output for identical (seed, K, det_floor).
std::vector<Eigen::Matrix3d> sample_deformations(std::uint64_t seed, int count,
                                                 double det_floor);

}  // namespace matevo::dsl
