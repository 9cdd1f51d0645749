#include "omega/rational.hpp"

#include <stdexcept>

namespace omega {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow_int(const Rational& q, long n) {
  if (n < 0) {
    if (q == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / q;
    return pow_int(inv, -n);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(n));
  return make_rational(num, den);
}

namespace {

std::optional<Integer> exact_root(const Integer& z, unsigned long degree) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), degree) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> rational_power(const Rational& q, const Rational& alpha) {
  if (q <= 0) return std::nullopt;
  if (alpha.get_den() == 1) return pow_int(q, alpha.get_num().get_si());
  if (!alpha.get_den().fits_ulong_p()) return std::nullopt;
  const unsigned long degree = alpha.get_den().get_ui();
  auto num = exact_root(q.get_num(), degree);
  auto den = exact_root(q.get_den(), degree);
  if (!num || !den) return std::nullopt;
  return pow_int(make_rational(*num, *den), alpha.get_num().get_si());
}

Rational generalized_binomial(const Rational& alpha, unsigned long k) {
  Rational acc = 1;
  for (unsigned long i = 0; i < k; ++i) {
    acc *= (alpha - Rational(static_cast<long>(i)));
    acc /= Rational(static_cast<long>(i + 1));
  }
  return acc;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string body = text;
  bool negative = false;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  Rational value;
  const auto slash = body.find('/');
  const auto dot = body.find('.');
  auto digits_only = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash != std::string::npos) {
    const std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!digits_only(n) || !digits_only(d)) throw std::invalid_argument("bad rational literal: " + text);
    Integer den(d);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    value = make_rational(Integer(n), den);
  } else if (dot != std::string::npos) {
    const std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (!digits_only(whole) || !digits_only(frac)) throw std::invalid_argument("bad decimal literal: " + text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = make_rational(Integer(whole + frac), scale);
  } else {
    if (!digits_only(body)) throw std::invalid_argument("bad integer literal: " + text);
    value = Rational(Integer(body));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace omega
