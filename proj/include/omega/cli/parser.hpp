#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omega/cli/lexer.hpp"
#include "omega/rational.hpp"

namespace omega::cli {

enum class NodeKind {
  Number,    // nonnegative integer literal
  Symbol,    // o, S, eps
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,       // kids[0] ^ exponent
  Apply,     // func(kids[0])
  Diff,      // D^p[func](kids[0])
  Leibniz,   // d^p[func](kids[0])
  Integral,  // int^p[func; kids[1..]](kids[0])
  Solve,     // solve[func = kids[0]; kids[1]]
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// A named builtin (exp, p3, sqrt, ...) or a coefficient list {c0, c1, ...},
// optionally anchored at a standard base point with @t.
struct FuncRef {
  std::string name;  // empty for a coefficient list
  std::vector<ExprPtr> coefficients;
  std::optional<Rational> base;
};

struct Expr {
  NodeKind kind;
  std::size_t offset = 0;  // position of the node's first token; ignored by ==
  Rational value;          // Number literal or Pow exponent
  std::string symbol;
  std::size_t order = 0;  // p for Diff, Leibniz and Integral
  std::shared_ptr<const FuncRef> func;
  std::vector<ExprPtr> kids;
};

bool operator==(const Expr& a, const Expr& b);
bool operator==(const FuncRef& a, const FuncRef& b);

// Whole-line expression. Throws ParseError.
ExprPtr parse(const std::string& text);
// Whole-line function reference such as "exp", "p2@3" or "{1, o}".
FuncRef parse_function(const std::string& text);

// Canonical text; parse(format(e)) == e.
std::string format(const Expr& e);
std::string format(const FuncRef& f);

bool is_function_name(const std::string& name);

}  // namespace omega::cli
