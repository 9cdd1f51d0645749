#include "omega/cli/parser.hpp"

#include <cctype>

namespace omega::cli {

namespace {

const std::set<std::string> kPrimaryStart = {"'('", "'-'", "'{'", "function", "number", "symbol"};

bool is_symbol_name(const std::string& s) { return s == "o" || s == "S" || s == "eps"; }

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  ExprPtr parse_line() {
    auto e = expression();
    expect_end({"'*'", "'+'", "'-'", "'/'", "'^'"});
    return e;
  }

  FuncRef parse_function_line() {
    auto f = function_ref();
    expect_end({"'@'"});
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_punct(const char* p) const { return peek().kind == TokenKind::Punct && peek().text == p; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw ParseError(peek().offset, std::move(expected), describe(peek()));
  }

  void expect_punct(const char* p) {
    if (!at_punct(p)) fail({std::string("'") + p + "'"});
    advance();
  }

  void expect_end(std::set<std::string> alternatives) {
    if (peek().kind == TokenKind::End) return;
    alternatives.insert("end of input");
    fail(std::move(alternatives));
  }

  static ExprPtr make(NodeKind kind, std::size_t offset, std::vector<ExprPtr> kids = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = offset;
    e->kids = std::move(kids);
    return e;
  }

  ExprPtr expression() {
    auto left = term();
    while (at_punct("+") || at_punct("-")) {
      const auto kind = advance().text == "+" ? NodeKind::Add : NodeKind::Sub;
      auto right = term();
      left = make(kind, left->offset, {left, right});
    }
    return left;
  }

  ExprPtr term() {
    auto left = unary();
    while (at_punct("*") || at_punct("/")) {
      const auto kind = advance().text == "*" ? NodeKind::Mul : NodeKind::Div;
      auto right = unary();
      left = make(kind, left->offset, {left, right});
    }
    return left;
  }

  ExprPtr unary() {
    if (at_punct("-")) {
      const auto offset = advance().offset;
      return make(NodeKind::Neg, offset, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (!at_punct("^")) return base;
    advance();
    auto e = std::const_pointer_cast<Expr>(make(NodeKind::Pow, base->offset, {base}));
    e->value = literal("exponent");
    return e;
  }

  // integer | "(" ["-"] integer ["/" integer] ")"
  Rational literal(const std::string& what) {
    if (peek().kind == TokenKind::Integer) return Rational(Integer(advance().text));
    if (!at_punct("(")) fail({"'('", "integer " + what});
    advance();
    bool negative = false;
    if (at_punct("-")) {
      advance();
      negative = true;
    }
    if (peek().kind != TokenKind::Integer) fail({"integer"});
    Integer num(advance().text);
    Integer den = 1;
    if (at_punct("/")) {
      advance();
      if (peek().kind != TokenKind::Integer || Integer(peek().text) == 0) fail({"nonzero integer"});
      den = Integer(advance().text);
    }
    expect_punct(")");
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  std::size_t operator_order() {
    if (!at_punct("^")) return 1;
    advance();
    if (peek().kind != TokenKind::Integer || Integer(peek().text) == 0 || Integer(peek().text) > 64)
      fail({"integer order in 1..64"});
    return std::stoul(advance().text);
  }

  FuncRef function_ref() {
    FuncRef f;
    if (at_punct("{")) {
      advance();
      f.coefficients.push_back(expression());
      while (at_punct(",")) {
        advance();
        f.coefficients.push_back(expression());
      }
      if (!at_punct("}")) fail({"'+'", "','", "'-'", "'}'", "'*'", "'/'", "'^'"});
      advance();
    } else if (peek().kind == TokenKind::Identifier && is_function_name(peek().text)) {
      f.name = advance().text;
    } else {
      fail({"'{'", "function"});
    }
    if (at_punct("@")) {
      advance();
      f.base = literal("base point");
    }
    return f;
  }

  ExprPtr argument(ExprPtr node) {
    expect_punct("(");
    auto arg = expression();
    if (!at_punct(")")) fail({"')'", "'*'", "'+'", "'-'", "'/'", "'^'"});
    advance();
    std::const_pointer_cast<Expr>(node)->kids.insert(node->kids.begin(), arg);
    return node;
  }

  ExprPtr with_func(NodeKind kind, std::size_t offset, FuncRef f, std::size_t order = 0) {
    auto e = std::const_pointer_cast<Expr>(make(kind, offset));
    e->func = std::make_shared<const FuncRef>(std::move(f));
    e->order = order;
    return e;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Integer) {
      auto e = std::const_pointer_cast<Expr>(make(NodeKind::Number, t.offset));
      e->value = Rational(Integer(advance().text));
      return e;
    }
    if (at_punct("(")) {
      advance();
      auto e = expression();
      if (!at_punct(")")) fail({"')'", "'*'", "'+'", "'-'", "'/'", "'^'"});
      advance();
      return e;
    }
    if (at_punct("{")) {
      const auto offset = t.offset;
      return argument(with_func(NodeKind::Apply, offset, function_ref()));
    }
    if (t.kind != TokenKind::Identifier) fail(kPrimaryStart);

    const std::string& name = t.text;
    const auto offset = t.offset;
    if (is_symbol_name(name)) {
      auto e = std::const_pointer_cast<Expr>(make(NodeKind::Symbol, offset));
      e->symbol = advance().text;
      return e;
    }
    if (name == "D" || name == "d") {
      advance();
      const auto order = operator_order();
      expect_punct("[");
      auto f = function_ref();
      expect_punct("]");
      return argument(with_func(name == "D" ? NodeKind::Diff : NodeKind::Leibniz, offset, std::move(f), order));
    }
    if (name == "int") {
      advance();
      const auto order = operator_order();
      expect_punct("[");
      auto f = function_ref();
      std::vector<ExprPtr> initial;
      if (at_punct(";")) {
        advance();
        initial.push_back(expression());
        while (at_punct(",")) {
          advance();
          initial.push_back(expression());
        }
      }
      if (!at_punct("]")) fail({"','", "';'", "']'"});
      advance();
      auto e = argument(with_func(NodeKind::Integral, offset, std::move(f), order));
      auto& kids = std::const_pointer_cast<Expr>(e)->kids;
      kids.insert(kids.end(), initial.begin(), initial.end());
      return e;
    }
    if (name == "solve") {
      advance();
      expect_punct("[");
      auto f = function_ref();
      expect_punct("=");
      auto rhs = expression();
      if (!at_punct(";")) fail({"';'", "'*'", "'+'", "'-'", "'/'", "'^'"});
      advance();
      auto seed = expression();
      if (!at_punct("]")) fail({"']'", "'*'", "'+'", "'-'", "'/'", "'^'"});
      advance();
      auto e = std::const_pointer_cast<Expr>(with_func(NodeKind::Solve, offset, std::move(f)));
      e->kids = {rhs, seed};
      return e;
    }
    if (is_function_name(name)) {
      auto node = argument(with_func(NodeKind::Apply, offset, function_ref()));
      if (node->func->name != "sqrt" || node->func->base) return node;
      // sqrt(x) is x^(1/2)
      auto pow = std::const_pointer_cast<Expr>(make(NodeKind::Pow, offset, {node->kids[0]}));
      pow->value = make_rational(1, 2);
      return pow;
    }
    fail(kPrimaryStart);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case NodeKind::Add:
    case NodeKind::Sub:
      return 1;
    case NodeKind::Mul:
    case NodeKind::Div:
      return 2;
    case NodeKind::Neg:
      return 3;
    case NodeKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap_if(bool cond, const std::string& s) { return cond ? "(" + s + ")" : s; }

std::string format_literal(const Rational& r) {
  if (r >= 0 && r.get_den() == 1) return r.get_num().get_str();
  return "(" + to_string(r) + ")";
}

std::string join(const std::vector<ExprPtr>& items, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < items.size(); ++i) {
    if (i > from) out += ", ";
    out += format(*items[i]);
  }
  return out;
}

std::string order_suffix(std::size_t p) { return p == 1 ? "" : "^" + std::to_string(p); }

}  // namespace

bool is_function_name(const std::string& name) {
  static const std::set<std::string> named = {"exp", "sin", "cos", "log", "geom", "id", "sqrt"};
  if (named.count(name)) return true;
  if (name.size() < 2 || name[0] != 'p') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return name.size() <= 4;
}

bool operator==(const FuncRef& a, const FuncRef& b) {
  if (a.name != b.name || a.base != b.base || a.coefficients.size() != b.coefficients.size()) return false;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    if (!(*a.coefficients[i] == *b.coefficients[i])) return false;
  return true;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.symbol != b.symbol || a.order != b.order ||
      a.kids.size() != b.kids.size() || bool(a.func) != bool(b.func))
    return false;
  if (a.func && !(*a.func == *b.func)) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!(*a.kids[i] == *b.kids[i])) return false;
  return true;
}

ExprPtr parse(const std::string& text) { return Parser(text).parse_line(); }

FuncRef parse_function(const std::string& text) { return Parser(text).parse_function_line(); }

std::string format(const FuncRef& f) {
  std::string out = f.name.empty() ? "{" + join(f.coefficients) + "}" : f.name;
  if (f.base) out += "@" + format_literal(*f.base);
  return out;
}

std::string format(const Expr& e) {
  switch (e.kind) {
    case NodeKind::Number:
      return e.value.get_num().get_str();
    case NodeKind::Symbol:
      return e.symbol;
    case NodeKind::Neg:
      return "-" + wrap_if(precedence(*e.kids[0]) < 3, format(*e.kids[0]));
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
      const int p = precedence(e);
      const char* op = e.kind == NodeKind::Add ? " + " : e.kind == NodeKind::Sub ? " - " : e.kind == NodeKind::Mul ? "*" : "/";
      return wrap_if(precedence(*e.kids[0]) < p, format(*e.kids[0])) + op +
             wrap_if(precedence(*e.kids[1]) <= p, format(*e.kids[1]));
    }
    case NodeKind::Pow:
      return wrap_if(precedence(*e.kids[0]) < 5, format(*e.kids[0])) + "^" + format_literal(e.value);
    case NodeKind::Apply:
      return format(*e.func) + "(" + format(*e.kids[0]) + ")";
    case NodeKind::Diff:
    case NodeKind::Leibniz:
      return std::string(e.kind == NodeKind::Diff ? "D" : "d") + order_suffix(e.order) + "[" + format(*e.func) + "](" +
             format(*e.kids[0]) + ")";
    case NodeKind::Integral: {
      std::string inner = format(*e.func);
      if (e.kids.size() > 1) inner += "; " + join(e.kids, 1);
      return "int" + order_suffix(e.order) + "[" + inner + "](" + format(*e.kids[0]) + ")";
    }
    case NodeKind::Solve:
      return "solve[" + format(*e.func) + " = " + format(*e.kids[0]) + "; " + format(*e.kids[1]) + "]";
  }
  return {};
}

}  // namespace omega::cli
