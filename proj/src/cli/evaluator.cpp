#include "omega/cli/evaluator.hpp"

#include <cctype>

#include "omega/calculus.hpp"

namespace omega::cli {

namespace {

bool is_finite(const Value& v) { return std::holds_alternative<OmegaNumber>(v); }

OmegaNumber finite(const Value& v, const char* what) {
  if (!is_finite(v)) throw DomainError(std::string("infinite moments support comparison and +/- only, not ") + what);
  return std::get<OmegaNumber>(v);
}

ExtendedOmega add_extended(const OmegaNumber& x, const ExtendedOmega& y, int y_sign) {
  const auto& m = *y.infinite_moment();
  const auto prefix = y_sign > 0 ? x + y.prefix() : x - y.prefix();
  return ExtendedOmega::with_infinite_moment(prefix, m.position, y_sign * m.sign);
}

// Standard part of x when x is in R_o, otherwise 0.
Rational anchor(const OmegaNumber& x) {
  if (x.is_zero() || x.valuation() >= 0) return x.known_order() >= 0 ? standard_part(x) : Rational(0);
  return 0;
}

class Evaluator {
 public:
  explicit Evaluator(Exponent order) : order_(order) {}

  Value eval(const Expr& e) {
    switch (e.kind) {
      case NodeKind::Number:
        return OmegaNumber(e.value);
      case NodeKind::Symbol:
        if (e.symbol == "o") return OmegaNumber::o();
        if (e.symbol == "S") return OmegaNumber::sigma();
        return ExtendedOmega::epsilon();
      case NodeKind::Neg: {
        const auto v = eval(*e.kids[0]);
        if (is_finite(v)) return -std::get<OmegaNumber>(v);
        return add_extended(OmegaNumber(), std::get<ExtendedOmega>(v), -1);
      }
      case NodeKind::Add:
      case NodeKind::Sub: {
        const auto a = eval(*e.kids[0]);
        const auto b = eval(*e.kids[1]);
        const int sb = e.kind == NodeKind::Add ? 1 : -1;
        if (is_finite(a) && is_finite(b))
          return sb > 0 ? std::get<OmegaNumber>(a) + std::get<OmegaNumber>(b)
                        : std::get<OmegaNumber>(a) - std::get<OmegaNumber>(b);
        if (is_finite(a)) return add_extended(std::get<OmegaNumber>(a), std::get<ExtendedOmega>(b), sb);
        if (is_finite(b)) {
          const auto& x = std::get<ExtendedOmega>(a);
          const auto prefix = sb > 0 ? x.prefix() + std::get<OmegaNumber>(b) : x.prefix() - std::get<OmegaNumber>(b);
          return ExtendedOmega::with_infinite_moment(prefix, x.infinite_moment()->position, x.infinite_moment()->sign);
        }
        throw DomainError("sum of two infinite moments");
      }
      case NodeKind::Mul:
        return finite(eval(*e.kids[0]), "'*'") * finite(eval(*e.kids[1]), "'*'");
      case NodeKind::Div:
        return divide(finite(eval(*e.kids[0]), "'/'"), finite(eval(*e.kids[1]), "'/'"), order_);
      case NodeKind::Pow:
        return pow_rational(finite(eval(*e.kids[0]), "'^'"), e.value, order_);
      case NodeKind::Apply: {
        const auto x = finite(eval(*e.kids[0]), "function arguments");
        return omega::eval(resolve_function(*e.func, anchor(x), order_), x, order_);
      }
      case NodeKind::Diff:
      case NodeKind::Leibniz: {
        const auto x = finite(eval(*e.kids[0]), "function arguments");
        const auto f = resolve_function(*e.func, anchor(x), order_);
        return e.kind == NodeKind::Diff ? finite_difference(f, x, e.order, order_)
                                        : leibniz_differential(f, x, e.order, order_);
      }
      case NodeKind::Integral: {
        const auto x = finite(eval(*e.kids[0]), "function arguments");
        const auto f = resolve_function(*e.func, natural_base(*e.func), order_);
        if (e.order == 1 && e.kids.size() == 1) return omega::eval(integrate(f, OmegaNumber()), x, order_);
        std::vector<OmegaNumber> initial;
        for (std::size_t i = 1; i < e.kids.size(); ++i) initial.push_back(finite(eval(*e.kids[i]), "initial values"));
        if (initial.empty()) initial.resize(e.order);
        return omega::eval(solve_ode(f, e.order, initial), x, order_);
      }
      case NodeKind::Solve: {
        const auto y = finite(eval(*e.kids[0]), "equation right-hand sides");
        const auto seed = standard_value(finite(eval(*e.kids[1]), "seeds"));
        return solve_lift(resolve_function(*e.func, seed, order_), y, seed, order_);
      }
    }
    throw std::logic_error("unhandled expression node");
  }

 private:
  Exponent order_;
};

bool reached(const Value& v, Exponent order) {
  if (!is_finite(v)) return true;
  const auto k = std::get<OmegaNumber>(v).known_order();
  return k >= order;
}

// Exact values with nothing above o^order stay exact.
Value clip(const Value& v, Exponent order) {
  if (!is_finite(v)) return v;
  const auto& x = std::get<OmegaNumber>(v);
  if (x.is_exact() && (x.is_zero() || x.last_exponent() <= order)) return x;
  return x.clip(order);
}

}  // namespace

Value evaluate(const Expr& e, Exponent order) {
  Value v;
  for (Exponent guard = 0; guard <= 32; guard += 4) {
    v = Evaluator(order + guard).eval(e);
    if (reached(v, order)) break;
  }
  return clip(v, order);
}

OmegaNumber evaluate_number(const Expr& e, Exponent order) { return finite(evaluate(e, order), "this command"); }

Rational standard_value(const OmegaNumber& x) {
  if (!x.is_exact() || (!x.is_zero() && (x.valuation() != 0 || x.last_exponent() != 0)))
    throw DomainError(to_string(x) + " is not a standard rational");
  return x.is_zero() ? Rational(0) : x.coefficients().front();
}

Rational natural_base(const FuncRef& f) {
  if (f.base) return *f.base;
  return f.name == "log" || f.name == "sqrt" ? Rational(1) : Rational(0);
}

RegularFunction resolve_function(const FuncRef& f, const Rational& default_base, Exponent order) {
  if (f.name.empty()) {
    std::vector<OmegaNumber> coeffs;
    for (const auto& c : f.coefficients) coeffs.push_back(evaluate_number(*c, order));
    return RegularFunction::polynomial(format(f), f.base.value_or(0), coeffs);
  }
  const Rational base = f.base.value_or(default_base);
  if (f.name == "sqrt") return builtin_pow(make_rational(1, 2), base);
  if (f.name[0] == 'p' && f.name.size() > 1 && std::isdigit(static_cast<unsigned char>(f.name[1])))
    return monomial_function(std::stoul(f.name.substr(1)), base);
  return builtin(f.name, base);
}

RationalFunction evaluate_rational(const Expr& e) {
  switch (e.kind) {
    case NodeKind::Number:
      return RationalFunction(e.value);
    case NodeKind::Symbol:
      if (e.symbol == "o") return RationalFunction::o();
      if (e.symbol == "S") return RationalFunction::sigma();
      break;
    case NodeKind::Neg:
      return -evaluate_rational(*e.kids[0]);
    case NodeKind::Add:
      return evaluate_rational(*e.kids[0]) + evaluate_rational(*e.kids[1]);
    case NodeKind::Sub:
      return evaluate_rational(*e.kids[0]) - evaluate_rational(*e.kids[1]);
    case NodeKind::Mul:
      return evaluate_rational(*e.kids[0]) * evaluate_rational(*e.kids[1]);
    case NodeKind::Div:
      return evaluate_rational(*e.kids[0]) / evaluate_rational(*e.kids[1]);
    case NodeKind::Pow:
      if (e.value.get_den() != 1 || !e.value.get_num().fits_slong_p())
        throw DomainError("rational functions take integer powers only");
      return pow_int(evaluate_rational(*e.kids[0]), e.value.get_num().get_si());
    default:
      break;
  }
  throw DomainError("'" + format(e) + "' is not a rational function of o");
}

}  // namespace omega::cli
