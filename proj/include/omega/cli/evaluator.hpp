#pragma once

#include <optional>
#include <variant>

#include "omega/cli/parser.hpp"
#include "omega/omega_number.hpp"
#include "omega/rational_function.hpp"
#include "omega/regular_function.hpp"

namespace omega::cli {

using Value = std::variant<OmegaNumber, ExtendedOmega>;

// Evaluates e so that the result is known to o^order when possible. Sigma
// powers consume known order, so the working order is raised in steps of 4
// (up to 32 extra) until the result reaches `order`; the result is clipped there.
Value evaluate(const Expr& e, Exponent order);
// Same, but the result must be finite (no eps).
OmegaNumber evaluate_number(const Expr& e, Exponent order);

// Regular function for a reference. Without an explicit @base, named builtins
// sit at `default_base` and coefficient lists at 0.
RegularFunction resolve_function(const FuncRef& f, const Rational& default_base, Exponent order);
// Base used by operator forms when no @base is given: 1 for log and sqrt, else 0.
Rational natural_base(const FuncRef& f);

// x as a standard rational; DomainError when x has o or Sigma terms or is truncated.
Rational standard_value(const OmegaNumber& x);

// Reads an expression built from integers, o, S, + - * / and integer powers as an element of R(o).
RationalFunction evaluate_rational(const Expr& e);

}  // namespace omega::cli
