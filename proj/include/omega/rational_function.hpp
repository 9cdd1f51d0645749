#pragma once

#include <compare>
#include <string>
#include <vector>

#include "omega/omega_number.hpp"

namespace omega {

// Polynomial in o with rational coefficients; index = power of o.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial o_power(std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree; 0 for the zero polynomial.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  // Number of leading factors o, i.e. the lowest power with nonzero coefficient.
  std::size_t o_adic_order() const;

  OmegaNumber to_omega() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Quotient and remainder of a by a nonzero b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Element of R(o) kept as P/Q with gcd(P, Q) = 1 and Q monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction o() { return RationalFunction(Polynomial::o_power(1), Polynomial::constant(1)); }
  static RationalFunction sigma() { return RationalFunction(Polynomial::constant(1), Polynomial::o_power(1)); }
  // Exact Laurent polynomial as a rational function.
  static RationalFunction from_omega(const OmegaNumber& x);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction invert(const RationalFunction& rf);
RationalFunction pow_int(const RationalFunction& rf, long n);

// Laurent expansion known up to o^order: Q = o^k Q1 with Q1(0) != 0, then
// P/Q = Sigma^k (P/Q1) with P/Q1 by division in increasing powers.
OmegaNumber expand(const RationalFunction& rf, Exponent order);

// Order of R(o) read off the expansions. Equal values short-circuit;
// otherwise throws IndistinguishableAtTruncation when order is too small.
std::strong_ordering compare(const RationalFunction& a, const RationalFunction& b, Exponent order);

// Truncations T_0(target), ..., T_n(target) as polynomials.
std::vector<RationalFunction> completion_demo(const OmegaNumber& target, Exponent n);

// F = T_N((s + t)/2) with N = ord(t - s); s < F < t for s < t.
RationalFunction density_witness(const OmegaNumber& s, const OmegaNumber& t);

// Side of sqrt(radicand) on which a positive rf lies, decided by comparing rf^2 with radicand.
std::strong_ordering sqrt_cut_side(const RationalFunction& rf, const RationalFunction& radicand);

std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& rf);

}  // namespace omega
