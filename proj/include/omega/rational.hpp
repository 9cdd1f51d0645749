#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace omega {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent of `o`. Negative exponents are powers of Sigma = 1/o.
using Exponent = std::int64_t;

/// Marker for "every coefficient is known" (no O(...) tail).
inline constexpr Exponent kExact = std::numeric_limits<Exponent>::max();

/// Saturating sum of two orders; anything involving kExact stays exact.
inline Exponent order_add(Exponent a, Exponent b) {
  if (a == kExact || b == kExact) return kExact;
  return a + b;
}

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Largest integer <= q.
Integer floor_of(const Rational& q);

bool is_integer(const Rational& q);

/// q^n for signed n; q must be nonzero when n < 0.
Rational pow_int(const Rational& q, long n);

/// Exact q^(p/d) when it is rational, nullopt otherwise. q must be > 0.
std::optional<Rational> rational_power(const Rational& q, const Rational& alpha);

/// Generalized binomial alpha(alpha-1)...(alpha-k+1)/k!.
Rational generalized_binomial(const Rational& alpha, unsigned long k);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q" or a decimal like "0.25". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace omega
