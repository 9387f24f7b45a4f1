#include "matevo/dsl.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

namespace matevo::dsl {

namespace {

// --------------------------------------------------------------------------
// Tokenizer
// --------------------------------------------------------------------------

enum class TokKind {
  Number,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  Semicolon,
  End
};

struct Token {
  TokKind kind;
  double number = 0.0;
  std::string ident;
  std::size_t pos = 0;
};

struct LineCol {
  int line;
  int col;
};

LineCol line_col(const std::string& text, std::size_t pos) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& text, std::size_t pos,
                       const std::string& message) {
  auto lc = line_col(text, pos);
  throw ParseError(message, pos, lc.line, lc.col);
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token tok;
    tok.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t start = i;
      while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                       text[i] == '.'))
        ++i;
      if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
          i = j;
          while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        }
      }
      const std::string lit = text.substr(start, i - start);
      char* end = nullptr;
      tok.kind = TokKind::Number;
      tok.number = std::strtod(lit.c_str(), &end);
      if (end == nullptr || *end != '\0')
        fail(text, start, "malformed numeric literal '" + lit + "'");
      out.push_back(tok);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '_'))
        ++i;
      tok.kind = TokKind::Ident;
      tok.ident = text.substr(start, i - start);
      out.push_back(tok);
      continue;
    }
    switch (c) {
      case '+': tok.kind = TokKind::Plus; break;
      case '-': tok.kind = TokKind::Minus; break;
      case '*': tok.kind = TokKind::Star; break;
      case '/': tok.kind = TokKind::Slash; break;
      case '^': tok.kind = TokKind::Caret; break;
      case '(': tok.kind = TokKind::LParen; break;
      case ')': tok.kind = TokKind::RParen; break;
      case ',': tok.kind = TokKind::Comma; break;
      case ';': tok.kind = TokKind::Semicolon; break;
      default:
        fail(text, i, std::string("unexpected character '") + c + "'");
    }
    ++i;
    out.push_back(tok);
  }
  Token end_tok;
  end_tok.kind = TokKind::End;
  end_tok.pos = n;
  out.push_back(end_tok);
  return out;
}

// --------------------------------------------------------------------------
// Parser
// --------------------------------------------------------------------------

struct BuiltinInfo {
  Builtin builtin;
  int arity;
};

const std::map<std::string, BuiltinInfo>& builtin_table() {
  static const std::map<std::string, BuiltinInfo> table = {
      {"exp", {Builtin::Exp, 1}},       {"sin", {Builtin::Sin, 1}},
      {"cos", {Builtin::Cos, 1}},       {"sqrt", {Builtin::Sqrt, 1}},
      {"log", {Builtin::Log, 1}},       {"tr", {Builtin::Tr, 1}},
      {"det", {Builtin::Det, 1}},       {"transpose", {Builtin::Transpose, 1}},
      {"matmul", {Builtin::Matmul, 2}}, {"quad", {Builtin::Quad, 2}},
      {"vec", {Builtin::Vec, 3}},       {"mat", {Builtin::Mat, 9}},
      {"elem", {Builtin::Elem, 3}},
  };
  return table;
}

const char* kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::Scalar: return "scalar";
    case ValueKind::Vector: return "vector";
    case ValueKind::Matrix: return "matrix";
  }
  return "?";
}

class Parser {
 public:
  Parser(const std::string& text)
      : text_(text), tokens_(tokenize(text)), at_(0) {}

  std::vector<NodePtr> parse_model() {
    std::vector<NodePtr> comps;
    comps.push_back(parse_component());
    while (peek().kind == TokKind::Semicolon) {
      advance();
      comps.push_back(parse_component());
    }
    if (peek().kind != TokKind::End)
      fail(text_, peek().pos, "expected ';' or end of input");
    return comps;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& advance() { return tokens_[at_++]; }

  NodePtr parse_component() {
    NodePtr e = parse_expr();
    if (e->kind != ValueKind::Scalar)
      fail(text_, e->src_pos,
           std::string("component must be scalar-valued, got ") +
               kind_name(e->kind));
    return e;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const Token& op = advance();
      NodePtr rhs = parse_term();
      lhs = make_binary(op.kind == TokKind::Plus ? BinOp::Add : BinOp::Sub,
                        lhs, rhs, op.pos);
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    while (peek().kind == TokKind::Star || peek().kind == TokKind::Slash) {
      const Token& op = advance();
      NodePtr rhs = parse_unary();
      lhs = make_binary(op.kind == TokKind::Star ? BinOp::Mul : BinOp::Div,
                        lhs, rhs, op.pos);
    }
    return lhs;
  }

  NodePtr parse_unary() {
    if (peek().kind == TokKind::Minus) {
      const Token& op = advance();
      NodePtr inner = parse_unary();
      auto node = std::make_shared<Node>();
      node->tag = Node::Tag::Unary;
      node->kind = inner->kind;
      node->args = {inner};
      node->src_pos = op.pos;
      return node;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (peek().kind == TokKind::Caret) {
      const Token& op = advance();
      NodePtr expo = parse_unary();
      return make_binary(BinOp::Pow, base, expo, op.pos);
    }
    return base;
  }

  NodePtr parse_atom() {
    const Token& tok = peek();
    if (tok.kind == TokKind::Number) {
      advance();
      auto node = std::make_shared<Node>();
      node->tag = Node::Tag::Number;
      node->kind = ValueKind::Scalar;
      node->number = tok.number;
      node->src_pos = tok.pos;
      return node;
    }
    if (tok.kind == TokKind::LParen) {
      advance();
      NodePtr inner = parse_expr();
      expect(TokKind::RParen, "expected ')'");
      return inner;
    }
    if (tok.kind == TokKind::Ident) {
      advance();
      if (peek().kind == TokKind::LParen) return parse_call(tok);
      return make_variable(tok);
    }
    fail(text_, tok.pos, "expected a number, identifier or '('");
  }

  NodePtr make_variable(const Token& tok) {
    auto node = std::make_shared<Node>();
    node->src_pos = tok.pos;
    if (tok.ident == "t" || tok.ident == "x1" || tok.ident == "x2" ||
        tok.ident == "x3") {
      node->tag = Node::Tag::Var;
      node->kind = ValueKind::Scalar;
      node->var_index = tok.ident == "t" ? 0 : (tok.ident[1] - '0');
      return node;
    }
    if (tok.ident == "F") {
      node->tag = Node::Tag::MatrixVar;
      node->kind = ValueKind::Matrix;
      return node;
    }
    if (builtin_table().count(tok.ident))
      fail(text_, tok.pos, "function '" + tok.ident + "' requires arguments");
    fail(text_, tok.pos, "unknown identifier '" + tok.ident + "'");
  }

  NodePtr parse_call(const Token& name) {
    auto it = builtin_table().find(name.ident);
    if (it == builtin_table().end())
      fail(text_, name.pos, "unknown identifier '" + name.ident + "'");
    const BuiltinInfo& info = it->second;

    expect(TokKind::LParen, "expected '('");
    std::vector<NodePtr> args;
    if (peek().kind != TokKind::RParen) {
      args.push_back(parse_expr());
      while (peek().kind == TokKind::Comma) {
        advance();
        args.push_back(parse_expr());
      }
    }
    expect(TokKind::RParen, "expected ')' or ','");

    if (static_cast<int>(args.size()) != info.arity)
      fail(text_, name.pos,
           "'" + name.ident + "' expects " + std::to_string(info.arity) +
               " argument(s), got " + std::to_string(args.size()));

    auto node = std::make_shared<Node>();
    node->tag = Node::Tag::Call;
    node->builtin = info.builtin;
    node->args = args;
    node->src_pos = name.pos;
    type_check_call(node.get(), name);
    return node;
  }

  void type_check_call(Node* node, const Token& name) {
    auto want = [&](int i, ValueKind k) {
      if (node->args[i]->kind != k)
        fail(text_, node->args[i]->src_pos,
             "argument " + std::to_string(i + 1) + " of '" + name.ident +
                 "' must be " + kind_name(k) + ", got " +
                 kind_name(node->args[i]->kind));
    };
    switch (node->builtin) {
      case Builtin::Exp:
      case Builtin::Sin:
      case Builtin::Cos:
      case Builtin::Sqrt:
      case Builtin::Log:
        want(0, ValueKind::Scalar);
        node->kind = ValueKind::Scalar;
        break;
      case Builtin::Tr:
      case Builtin::Det:
        want(0, ValueKind::Matrix);
        node->kind = ValueKind::Scalar;
        break;
      case Builtin::Transpose:
        want(0, ValueKind::Matrix);
        node->kind = ValueKind::Matrix;
        break;
      case Builtin::Matmul:
        want(0, ValueKind::Matrix);
        want(1, ValueKind::Matrix);
        node->kind = ValueKind::Matrix;
        break;
      case Builtin::Quad:
        want(0, ValueKind::Vector);
        want(1, ValueKind::Matrix);
        node->kind = ValueKind::Scalar;
        break;
      case Builtin::Vec:
        want(0, ValueKind::Scalar);
        want(1, ValueKind::Scalar);
        want(2, ValueKind::Scalar);
        node->kind = ValueKind::Vector;
        break;
      case Builtin::Mat:
        for (int i = 0; i < 9; ++i) want(i, ValueKind::Scalar);
        node->kind = ValueKind::Matrix;
        break;
      case Builtin::Elem: {
        want(0, ValueKind::Matrix);
        // Index arguments must be literal integers in 1..3.
        for (int i = 1; i <= 2; ++i) {
          const Node* a = node->args[i].get();
          if (a->tag != Node::Tag::Number || a->number != std::floor(a->number) ||
              a->number < 1 || a->number > 3)
            fail(text_, a->src_pos,
                 "'elem' index must be a literal integer in 1..3");
        }
        node->elem_row = static_cast<int>(node->args[1]->number) - 1;
        node->elem_col = static_cast<int>(node->args[2]->number) - 1;
        node->kind = ValueKind::Scalar;
        break;
      }
    }
  }

  NodePtr make_binary(BinOp op, NodePtr lhs, NodePtr rhs, std::size_t pos) {
    auto node = std::make_shared<Node>();
    node->tag = Node::Tag::Binary;
    node->op = op;
    node->args = {lhs, rhs};
    node->src_pos = pos;
    switch (op) {
      case BinOp::Add:
      case BinOp::Sub:
        if (lhs->kind != rhs->kind)
          fail(text_, pos,
               std::string("cannot add/subtract ") + kind_name(lhs->kind) +
                   " and " + kind_name(rhs->kind));
        node->kind = lhs->kind;
        break;
      case BinOp::Mul:
        if (lhs->kind == ValueKind::Scalar) {
          node->kind = rhs->kind;
        } else if (rhs->kind == ValueKind::Scalar) {
          node->kind = lhs->kind;
        } else {
          fail(text_, pos,
               "'*' needs a scalar operand; use matmul for matrix products");
        }
        break;
      case BinOp::Div:
        if (rhs->kind != ValueKind::Scalar)
          fail(text_, pos, "divisor must be scalar");
        node->kind = lhs->kind;
        break;
      case BinOp::Pow:
        if (lhs->kind != ValueKind::Scalar || rhs->kind != ValueKind::Scalar)
          fail(text_, pos, "'^' requires scalar operands");
        node->kind = ValueKind::Scalar;
        break;
    }
    return node;
  }

  void expect(TokKind kind, const std::string& message) {
    if (peek().kind != kind) fail(text_, peek().pos, message);
    advance();
  }

  const std::string& text_;
  std::vector<Token> tokens_;
  std::size_t at_;
};

// --------------------------------------------------------------------------
// Printer
// --------------------------------------------------------------------------

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int precedence(const Node& n) {
  switch (n.tag) {
    case Node::Tag::Binary:
      switch (n.op) {
        case BinOp::Add:
        case BinOp::Sub: return 1;
        case BinOp::Mul:
        case BinOp::Div: return 2;
        case BinOp::Pow: return 4;
      }
      return 0;
    case Node::Tag::Unary: return 3;
    default: return 5;
  }
}

const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Exp: return "exp";
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Sqrt: return "sqrt";
    case Builtin::Log: return "log";
    case Builtin::Tr: return "tr";
    case Builtin::Det: return "det";
    case Builtin::Transpose: return "transpose";
    case Builtin::Matmul: return "matmul";
    case Builtin::Quad: return "quad";
    case Builtin::Vec: return "vec";
    case Builtin::Mat: return "mat";
    case Builtin::Elem: return "elem";
  }
  return "?";
}

void print_node(const Node& n, std::string& out) {
  auto child = [&](const Node& c, bool needs_paren) {
    if (needs_paren) out += '(';
    print_node(c, out);
    if (needs_paren) out += ')';
  };
  switch (n.tag) {
    case Node::Tag::Number:
      out += format_double(n.number);
      break;
    case Node::Tag::Var:
      out += (n.var_index == 0)
                 ? "t"
                 : std::string("x") + static_cast<char>('0' + n.var_index);
      break;
    case Node::Tag::MatrixVar:
      out += "F";
      break;
    case Node::Tag::Unary: {
      out += '-';
      const Node& a = *n.args[0];
      child(a, precedence(a) < precedence(n));
      break;
    }
    case Node::Tag::Binary: {
      const Node& l = *n.args[0];
      const Node& r = *n.args[1];
      const int p = precedence(n);
      const char* op = n.op == BinOp::Add   ? "+"
                       : n.op == BinOp::Sub ? "-"
                       : n.op == BinOp::Mul ? "*"
                       : n.op == BinOp::Div ? "/"
                                            : "^";
      if (n.op == BinOp::Pow) {
        // right-associative; the base is atom-level in the grammar
        child(l, precedence(l) < 5);
        out += op;
        child(r, precedence(r) < 3);
      } else {
        child(l, precedence(l) < p);
        out += op;
        // left-associative: parenthesize a right child of equal precedence
        child(r, precedence(r) <= p);
      }
      break;
    }
    case Node::Tag::Call: {
      out += builtin_name(n.builtin);
      out += '(';
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) out += ',';
        print_node(*n.args[i], out);
      }
      out += ')';
      break;
    }
  }
}

// --------------------------------------------------------------------------
// Evaluation
// --------------------------------------------------------------------------

struct Value {
  ValueKind kind = ValueKind::Scalar;
  Jet s;
  JetVec3 v;
  JetMat3 m;
};

Value eval_node(const Node& n, const Jet& t, const JetVec3& x,
                const JetMat3& f);

Value eval_call(const Node& n, const Jet& t, const JetVec3& x,
                const JetMat3& f) {
  Value out;
  switch (n.builtin) {
    case Builtin::Exp:
    case Builtin::Sin:
    case Builtin::Cos:
    case Builtin::Sqrt:
    case Builtin::Log: {
      Value a = eval_node(*n.args[0], t, x, f);
      out.kind = ValueKind::Scalar;
      switch (n.builtin) {
        case Builtin::Exp: out.s = exp(a.s); break;
        case Builtin::Sin: out.s = sin(a.s); break;
        case Builtin::Cos: out.s = cos(a.s); break;
        case Builtin::Sqrt: out.s = sqrt(a.s); break;
        default: out.s = log(a.s); break;
      }
      return out;
    }
    case Builtin::Tr: {
      Value a = eval_node(*n.args[0], t, x, f);
      out.kind = ValueKind::Scalar;
      out.s = a.m[0] + a.m[4] + a.m[8];
      return out;
    }
    case Builtin::Det: {
      Value a = eval_node(*n.args[0], t, x, f);
      const JetMat3& m = a.m;
      out.kind = ValueKind::Scalar;
      out.s = m[0] * (m[4] * m[8] - m[5] * m[7]) -
              m[1] * (m[3] * m[8] - m[5] * m[6]) +
              m[2] * (m[3] * m[7] - m[4] * m[6]);
      return out;
    }
    case Builtin::Transpose: {
      Value a = eval_node(*n.args[0], t, x, f);
      out.kind = ValueKind::Matrix;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.m[3 * r + c] = a.m[3 * c + r];
      return out;
    }
    case Builtin::Matmul: {
      Value a = eval_node(*n.args[0], t, x, f);
      Value b = eval_node(*n.args[1], t, x, f);
      out.kind = ValueKind::Matrix;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          Jet acc = a.m[3 * r + 0] * b.m[3 * 0 + c];
          acc = acc + a.m[3 * r + 1] * b.m[3 * 1 + c];
          acc = acc + a.m[3 * r + 2] * b.m[3 * 2 + c];
          out.m[3 * r + c] = acc;
        }
      return out;
    }
    case Builtin::Quad: {
      Value v = eval_node(*n.args[0], t, x, f);
      Value m = eval_node(*n.args[1], t, x, f);
      out.kind = ValueKind::Scalar;
      Jet acc = Jet::constant(0.0);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          acc = acc + v.v[r] * m.m[3 * r + c] * v.v[c];
      out.s = acc;
      return out;
    }
    case Builtin::Vec: {
      out.kind = ValueKind::Vector;
      for (int i = 0; i < 3; ++i) out.v[i] = eval_node(*n.args[i], t, x, f).s;
      return out;
    }
    case Builtin::Mat: {
      out.kind = ValueKind::Matrix;
      for (int i = 0; i < 9; ++i) out.m[i] = eval_node(*n.args[i], t, x, f).s;
      return out;
    }
    case Builtin::Elem: {
      Value a = eval_node(*n.args[0], t, x, f);
      out.kind = ValueKind::Scalar;
      out.s = a.m[3 * n.elem_row + n.elem_col];
      return out;
    }
  }
  throw EvalError("unreachable builtin");
}

Value eval_node(const Node& n, const Jet& t, const JetVec3& x,
                const JetMat3& f) {
  Value out;
  switch (n.tag) {
    case Node::Tag::Number:
      out.kind = ValueKind::Scalar;
      out.s = Jet::constant(n.number);
      return out;
    case Node::Tag::Var:
      out.kind = ValueKind::Scalar;
      out.s = n.var_index == 0 ? t : x[n.var_index - 1];
      return out;
    case Node::Tag::MatrixVar:
      out.kind = ValueKind::Matrix;
      out.m = f;
      return out;
    case Node::Tag::Unary: {
      Value a = eval_node(*n.args[0], t, x, f);
      out.kind = a.kind;
      switch (a.kind) {
        case ValueKind::Scalar: out.s = -a.s; break;
        case ValueKind::Vector:
          for (int i = 0; i < 3; ++i) out.v[i] = -a.v[i];
          break;
        case ValueKind::Matrix:
          for (int i = 0; i < 9; ++i) out.m[i] = -a.m[i];
          break;
      }
      return out;
    }
    case Node::Tag::Binary: {
      Value a = eval_node(*n.args[0], t, x, f);
      Value b = eval_node(*n.args[1], t, x, f);
      out.kind = n.kind;
      switch (n.op) {
        case BinOp::Add:
        case BinOp::Sub: {
          const bool add = n.op == BinOp::Add;
          switch (n.kind) {
            case ValueKind::Scalar:
              out.s = add ? a.s + b.s : a.s - b.s;
              break;
            case ValueKind::Vector:
              for (int i = 0; i < 3; ++i)
                out.v[i] = add ? a.v[i] + b.v[i] : a.v[i] - b.v[i];
              break;
            case ValueKind::Matrix:
              for (int i = 0; i < 9; ++i)
                out.m[i] = add ? a.m[i] + b.m[i] : a.m[i] - b.m[i];
              break;
          }
          return out;
        }
        case BinOp::Mul: {
          const Value& scalar = a.kind == ValueKind::Scalar ? a : b;
          const Value& other = a.kind == ValueKind::Scalar ? b : a;
          switch (other.kind) {
            case ValueKind::Scalar: out.s = a.s * b.s; break;
            case ValueKind::Vector:
              for (int i = 0; i < 3; ++i) out.v[i] = scalar.s * other.v[i];
              break;
            case ValueKind::Matrix:
              for (int i = 0; i < 9; ++i) out.m[i] = scalar.s * other.m[i];
              break;
          }
          return out;
        }
        case BinOp::Div: {
          switch (a.kind) {
            case ValueKind::Scalar: out.s = a.s / b.s; break;
            case ValueKind::Vector:
              for (int i = 0; i < 3; ++i) out.v[i] = a.v[i] / b.s;
              break;
            case ValueKind::Matrix:
              for (int i = 0; i < 9; ++i) out.m[i] = a.m[i] / b.s;
              break;
          }
          return out;
        }
        case BinOp::Pow:
          out.s = pow(a.s, b.s);
          return out;
      }
      throw EvalError("unreachable binary op");
    }
    case Node::Tag::Call:
      return eval_call(n, t, x, f);
  }
  throw EvalError("unreachable node tag");
}

}  // namespace

static std::string print_components(const std::vector<NodePtr>& comps) {
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += "; ";
    print_node(*comps[i], out);
  }
  return out;
}

ResponseModel parse_response(const std::string& text) {
  Parser parser(text);
  ResponseModel model;
  model.components = parser.parse_model();
  model.text = print_components(model.components);
  return model;
}

std::string print_response(const ResponseModel& model) {
  return print_components(model.components);
}

ResponseJet eval_with_jet(const ResponseModel& model, const EvalPoint& p) {
  const Jet t = Jet::variable(p.t, kVarT);
  JetVec3 x;
  for (int i = 0; i < 3; ++i) x[i] = Jet::variable(p.x(i), var_index_x(i));
  JetMat3 f;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      f[3 * r + c] = Jet::variable(p.F(r, c), var_index_f(r, c));

  const int m = model.component_count();
  ResponseJet jet;
  jet.value.resize(m);
  jet.d_t.resize(m);
  jet.d_x.resize(m, 3);
  jet.d_F.resize(m, 9);
  for (int c = 0; c < m; ++c) {
    Value v = eval_node(*model.components[c], t, x, f);
    jet.value(c) = v.s.v;
    jet.d_t(c) = v.s.d[kVarT];
    for (int i = 0; i < 3; ++i) jet.d_x(c, i) = v.s.d[var_index_x(i)];
    for (int i = 0; i < 9; ++i) jet.d_F(c, i) = v.s.d[4 + i];
  }
  if (!jet.value.allFinite() || !jet.d_t.allFinite() ||
      !jet.d_x.allFinite() || !jet.d_F.allFinite())
    throw NumericError("non-finite response jet for model '" + model.name +
                       "'");
  return jet;
}

ResponseModel builtin_scenario(const std::string& name) {
  std::string text;
  if (name == "A") {
    text =
        "elem(F,1,1); elem(F,1,2); elem(F,1,3);"
        " elem(F,2,1); elem(F,2,2); elem(F,2,3);"
        " elem(F,3,1); elem(F,3,2); elem(F,3,3)";
  } else if (name == "B") {
    text = "tr(matmul(transpose(F),F)); t*det(F)";
  } else if (name == "C") {
    text = "tr(matmul(transpose(F),F)); t*elem(matmul(transpose(F),F),3,3)";
  } else if (name == "D") {
    text = "exp(2*t)*tr(matmul(transpose(F),F))";
  } else if (name == "E") {
    text = "(1+x1^2)*tr(matmul(transpose(F),F))";
  } else {
    throw ConfigError("unknown scenario '" + name + "' (expected A..E)");
  }
  ResponseModel model = parse_response(text);
  model.name = name;
  return model;
}

ResponseModel scale_model(const ResponseModel& model, double factor) {
  ResponseModel scaled;
  scaled.name = model.name + "*" + std::to_string(factor);
  auto factor_node = std::make_shared<Node>();
  factor_node->tag = Node::Tag::Number;
  factor_node->kind = ValueKind::Scalar;
  factor_node->number = factor;
  for (const NodePtr& c : model.components) {
    auto mul = std::make_shared<Node>();
    mul->tag = Node::Tag::Binary;
    mul->op = BinOp::Mul;
    mul->kind = ValueKind::Scalar;
    mul->args = {factor_node, c};
    scaled.components.push_back(mul);
  }
  scaled.text = print_response(scaled);
  return scaled;
}

std::vector<Eigen::Matrix3d> sample_deformations(std::uint64_t seed, int count,
                                                 double det_floor) {
  if (count < 1) throw ConfigError("sample count must be >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    // [0,1) from the top 53 bits; avoids distribution objects whose output
    // sequences are not pinned by the standard
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<Eigen::Matrix3d> out;
  out.reserve(static_cast<std::size_t>(count));
  constexpr int kMaxAttempts = 1000;
  while (static_cast<int>(out.size()) < count) {
    Eigen::Matrix3d u;
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) u(r, c) = uniform() - 0.5;
      if (std::abs((Eigen::Matrix3d::Identity() + u).determinant()) >=
          det_floor) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // contract the last candidate toward the identity until the floor
      // holds; converges since det(I) = 1
      for (int halvings = 0;
           halvings < 64 &&
           std::abs((Eigen::Matrix3d::Identity() + u).determinant()) <
               det_floor;
           ++halvings)
        u *= 0.5;
      if (std::abs((Eigen::Matrix3d::Identity() + u).determinant()) <
          det_floor)
        u.setZero();
    }
    out.push_back(Eigen::Matrix3d::Identity() + u);
  }
  return out;
}

}  // namespace matevo::dsl
