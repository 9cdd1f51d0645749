#include "omega/rational_function.hpp"

#include <algorithm>

namespace omega {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// T_n(x) as an exact Laurent polynomial.
OmegaNumber exact_truncation(const OmegaNumber& x, Exponent n) {
  const auto t = truncate(x, n);
  if (t.is_zero()) return {};
  return OmegaNumber::from_dense(t.valuation(), t.coefficients());
}

// ord(P/Q) <= ord(P), so the expansion sign is known at that order.
int sign_of(const RationalFunction& rf) {
  if (rf.is_zero()) return 0;
  return expand(rf, static_cast<Exponent>(rf.numerator().o_adic_order())).sign();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim(coeffs_);
}

Polynomial Polynomial::o_power(std::size_t k) {
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = 1;
  return Polynomial(std::move(c));
}

std::size_t Polynomial::o_adic_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

OmegaNumber Polynomial::to_omega() const { return OmegaNumber::from_dense(0, coeffs_); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  auto out = coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& d = b.coefficients();
  if (rem.size() < d.size()) return {Polynomial(), a};
  std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = rem[k + d.size() - 1] / d.back();
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(Rational(1) / x.leading());
}

RationalFunction::RationalFunction(const Rational& c) : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const auto g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Rational lead = den.leading();
  num_ = num.scaled(Rational(1) / lead);
  den_ = den.scaled(Rational(1) / lead);
}

RationalFunction RationalFunction::from_omega(const OmegaNumber& x) {
  if (!x.is_exact()) throw OrderExceedsKnown("only exact values are rational functions");
  if (x.is_zero()) return {};
  const Exponent v = x.valuation();
  std::vector<Rational> c;
  if (v > 0) c.assign(static_cast<std::size_t>(v), Rational(0));
  c.insert(c.end(), x.coefficients().begin(), x.coefficients().end());
  const auto den = v < 0 ? Polynomial::o_power(static_cast<std::size_t>(-v)) : Polynomial::constant(1);
  return RationalFunction(Polynomial(std::move(c)), den);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -num_;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction invert(const RationalFunction& rf) {
  if (rf.is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RationalFunction(rf.denominator(), rf.numerator());
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * invert(b); }

RationalFunction pow_int(const RationalFunction& rf, long n) {
  if (n < 0) return pow_int(invert(rf), -n);
  RationalFunction result(1), base = rf;
  for (unsigned long e = static_cast<unsigned long>(n); e; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

OmegaNumber expand(const RationalFunction& rf, Exponent order) {
  if (rf.is_zero()) return {};
  const auto& q = rf.denominator().coefficients();
  const std::size_t k = rf.denominator().o_adic_order();
  const std::vector<Rational> q1(q.begin() + static_cast<std::ptrdiff_t>(k), q.end());
  const auto& p = rf.numerator().coefficients();
  const Exponent shift = -static_cast<Exponent>(k);

  // S1 = P/Q1 by division in increasing powers, needed up to o^(order + k).
  if (q1.size() == 1) {
    auto s1 = rf.numerator().scaled(Rational(1) / q1[0]).to_omega();
    return s1.shifted(shift);
  }
  const Exponent need = order - shift;
  if (need < 0) return OmegaNumber::unknown(order);
  std::vector<Rational> s(static_cast<std::size_t>(need) + 1, Rational(0));
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational acc = n < p.size() ? p[n] : Rational(0);
    for (std::size_t j = 1; j < q1.size() && j <= n; ++j) acc -= q1[j] * s[n - j];
    s[n] = acc / q1[0];
  }
  return OmegaNumber::from_dense(shift, std::move(s), order);
}

std::strong_ordering compare(const RationalFunction& a, const RationalFunction& b, Exponent order) {
  if (a == b) return std::strong_ordering::equal;
  return compare(expand(a, order), expand(b, order));
}

std::vector<RationalFunction> completion_demo(const OmegaNumber& target, Exponent n) {
  if (!target.is_zero() && target.valuation() < 0) throw NotInRo("completion target must lie in R_o");
  std::vector<RationalFunction> out;
  for (Exponent p = 0; p <= n; ++p) out.push_back(RationalFunction::from_omega(exact_truncation(target, p)));
  return out;
}

RationalFunction density_witness(const OmegaNumber& s, const OmegaNumber& t) {
  const auto gap = t - s;
  if (gap.sign() <= 0) throw DomainError("density witness needs s < t");
  const Exponent n = *ord(gap);
  const auto mid = (s + t) * OmegaNumber(make_rational(1, 2));
  return RationalFunction::from_omega(exact_truncation(mid, n));
}

std::strong_ordering sqrt_cut_side(const RationalFunction& rf, const RationalFunction& radicand) {
  if (sign_of(rf) <= 0) throw DomainError("cut side needs a positive value");
  if (sign_of(radicand) < 0) throw DomainError("cut side needs a nonnegative radicand");
  const int s = sign_of(rf * rf - radicand);
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const Polynomial& p) { return to_string(p.to_omega()); }

std::string to_string(const RationalFunction& rf) {
  if (rf.denominator() == Polynomial::constant(1)) return to_string(rf.numerator());
  const auto wrap = [](const Polynomial& p) {
    const auto s = to_string(p);
    return p.coefficients().size() - p.o_adic_order() > 1 ? "(" + s + ")" : s;
  };
  return wrap(rf.numerator()) + "/" + wrap(rf.denominator());
}

}  // namespace omega
