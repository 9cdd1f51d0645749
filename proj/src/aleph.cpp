#include "omega/aleph.hpp"

#include <stdexcept>

namespace omega {

namespace {

void strip(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

AlephInt::AlephInt(long n) : AlephInt(Integer(n)) {}

AlephInt::AlephInt(const Integer& n) {
  if (n != 0) coeffs_.push_back(Rational(n));
}

AlephInt AlephInt::from_coefficients(std::vector<Rational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  if (!coeffs.empty() && !is_integer(coeffs[0]))
    throw DomainError("constant term " + to_string(coeffs[0]) + " of a nonstandard integer must be an integer");
  AlephInt r;
  r.coeffs_ = std::move(coeffs);
  strip(r.coeffs_);
  return r;
}

AlephInt AlephInt::sigma() { return from_coefficients({0, 1}); }

AlephInt AlephInt::from_omega(const OmegaNumber& x) {
  if (!x.is_exact()) throw OutOfDomain(to_string(x) + " is not exact");
  if (x.is_zero()) return {};
  if (x.last_exponent() > 0) throw OutOfDomain(to_string(x) + " has infinitesimal terms");
  std::vector<Rational> c(static_cast<std::size_t>(-x.valuation() + 1));
  for (Exponent e = x.valuation(); e <= 0; ++e) c[static_cast<std::size_t>(-e)] = x.coefficient(e);
  if (!is_integer(c[0])) throw OutOfDomain(to_string(x) + " has a non-integer constant term");
  return from_coefficients(std::move(c));
}

OmegaNumber AlephInt::to_omega() const {
  std::map<Exponent, Rational> raw;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) raw[-static_cast<Exponent>(k)] = coeffs_[k];
  return OmegaNumber::normalize(raw);
}

OmegaNumber GridPoint::to_omega() const { return OmegaNumber(t) + OmegaNumber::monomial(Rational(k), 1); }

AlephInt successor(const AlephInt& l) { return oplus(l, AlephInt(1)); }

AlephInt predecessor(const AlephInt& l) {
  if (l.is_zero()) throw PredecessorOfZero("0 has no predecessor");
  return oplus(l, AlephInt(-1));
}

AlephInt oplus(const AlephInt& l, const AlephInt& m) {
  std::vector<Rational> c(std::max(l.coefficients().size(), m.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = l.coefficient(k) + m.coefficient(k);
  return AlephInt::from_coefficients(std::move(c));
}

AlephInt odiamond(const AlephInt& l, const AlephInt& m) {
  if (l.is_zero() || m.is_zero()) return {};
  const auto& a = l.coefficients();
  const auto& b = m.coefficients();
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return AlephInt::from_coefficients(std::move(c));
}

std::strong_ordering compare_aleph(const AlephInt& l, const AlephInt& m) { return compare(l.to_omega(), m.to_omega()); }

AlephInt oplus_unrolled(const AlephInt& l, unsigned long m) {
  AlephInt acc = l;
  for (unsigned long i = 0; i < m; ++i) acc = successor(acc);
  return acc;
}

AlephInt odiamond_unrolled(const AlephInt& l, unsigned long m) {
  AlephInt acc;
  for (unsigned long i = 0; i < m; ++i) acc = oplus(acc, l);
  return acc;
}

bool in_aleph_plus(const AlephInt& l) {
  if (l.degree() >= 1) return l.coefficients().back() > 0;
  return l.coefficient(0) >= 0;
}

AlephInt phi(const GridPoint& x1) {
  if (x1.t < 0 || (x1.t == 0 && x1.k < 0))
    throw OutOfDomain(to_string(x1) + " is not a nonnegative grid point");
  return AlephInt::from_coefficients({Rational(x1.k), x1.t});
}

GridPoint psi(const AlephInt& l) {
  if (l.degree() > 1) throw OutOfDomain(to_string(l) + " has degree above 1");
  if (!in_aleph_plus(l)) throw OutOfDomain(to_string(l) + " is not in aleph+");
  return GridPoint{l.coefficient(1), l.coefficient(0).get_num()};
}

AlephInt integer_truncature(const OmegaNumber& x) {
  if (x.known_order() < 0)
    throw IndistinguishableAtTruncation("constant term of " + to_string(x) + " is not known");
  std::vector<Rational> c;
  if (!x.is_zero() && x.valuation() < 0) c.resize(static_cast<std::size_t>(-x.valuation() + 1));
  else c.resize(1);
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = x.coefficient(-static_cast<Exponent>(k));
  const Rational c0 = x.coefficient(0);
  Integer floor = floor_of(c0);
  if (is_integer(c0)) {
    std::map<Exponent, Rational> infinitesimal;
    if (!x.is_zero())
      for (Exponent e = std::max<Exponent>(x.valuation(), 1); e <= x.last_exponent(); ++e)
        infinitesimal[e] = x.coefficient(e);
    const OmegaNumber rest = OmegaNumber::normalize(infinitesimal, x.known_order());
    if (rest.is_zero() && !rest.is_exact())
      throw IndistinguishableAtTruncation("integer truncature of " + to_string(x) +
                                          " depends on unknown infinitesimal terms");
    if (!rest.is_zero() && rest.sign() < 0) floor -= 1;
  }
  c[0] = Rational(floor);
  return AlephInt::from_coefficients(std::move(c));
}

AlephInt archimedean_division(const OmegaNumber& a, const OmegaNumber& b) {
  if (a.is_exact_zero()) throw DivisionByZero("archimedean division by 0");
  if (a.sign() <= 0) throw OutOfDomain("divisor " + to_string(a) + " is not positive");
  if (b.sign() < 0) throw OutOfDomain("dividend " + to_string(b) + " is negative");

  // Floor of the standard coefficient of b/a, then one step down if the
  // infinitesimal part of the quotient turns out negative.
  const OmegaNumber quotient = divide(b, a, 0);
  if (quotient.known_order() < 0)
    throw IndistinguishableAtTruncation("standard part of " + to_string(b) + " / " + to_string(a) + " is not known");
  std::vector<Rational> c(1);
  if (!quotient.is_zero() && quotient.valuation() < 0) c.resize(static_cast<std::size_t>(-quotient.valuation() + 1));
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = quotient.coefficient(-static_cast<Exponent>(k));
  c[0] = Rational(floor_of(quotient.coefficient(0)));
  AlephInt l = AlephInt::from_coefficients(std::move(c));
  if (compare(l.to_omega() * a, b) == std::strong_ordering::greater) l = predecessor(l);
  const OmegaNumber low = l.to_omega() * a;
  const OmegaNumber high = successor(l).to_omega() * a;
  if (compare(low, b) == std::strong_ordering::greater || compare(b, high) != std::strong_ordering::less)
    throw std::logic_error("archimedean quotient check failed for " + to_string(b) + " / " + to_string(a));
  return l;
}

std::string to_string(const AlephInt& l) { return to_string(l.to_omega()); }

std::string to_string(const GridPoint& x) { return to_string(x.to_omega()); }

}  // namespace omega
