#include "omega/omega_number.hpp"

#include <algorithm>
#include <cassert>

namespace omega {

OmegaNumber::OmegaNumber(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

OmegaNumber::OmegaNumber(long c) : OmegaNumber(Rational(c)) {}

OmegaNumber OmegaNumber::monomial(const Rational& c, Exponent e) {
  OmegaNumber r;
  if (c != 0) {
    r.valuation_ = e;
    r.coeffs_.push_back(c);
    r.coeffs_.back().canonicalize();
  }
  return r;
}

OmegaNumber OmegaNumber::unknown(Exponent known_order) {
  OmegaNumber r;
  r.known_order_ = known_order;
  return r;
}

OmegaNumber OmegaNumber::build(Exponent first_exponent, std::vector<Rational>&& dense, Exponent known_order) {
  if (known_order != kExact) {
    const Exponent keep = known_order - first_exponent + 1;
    if (keep <= 0) {
      dense.clear();
    } else if (static_cast<Exponent>(dense.size()) > keep) {
      dense.resize(static_cast<std::size_t>(keep));
    }
  }
  for (auto& c : dense) c.canonicalize();
  while (!dense.empty() && dense.back() == 0) dense.pop_back();
  std::size_t lead = 0;
  while (lead < dense.size() && dense[lead] == 0) ++lead;
  OmegaNumber r;
  r.known_order_ = known_order;
  if (lead < dense.size()) {
    r.valuation_ = first_exponent + static_cast<Exponent>(lead);
    r.coeffs_.assign(std::make_move_iterator(dense.begin() + static_cast<std::ptrdiff_t>(lead)),
                     std::make_move_iterator(dense.end()));
  }
  return r;
}

OmegaNumber OmegaNumber::normalize(const std::map<Exponent, Rational>& raw, Exponent known_order) {
  if (raw.empty()) return unknown(known_order);
  const Exponent lo = raw.begin()->first;
  Exponent hi = raw.rbegin()->first;
  if (known_order != kExact) hi = std::min(hi, known_order);
  if (hi < lo) return unknown(known_order);
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : raw) {
    if (e > hi) break;
    Rational reduced = c;
    reduced.canonicalize();
    dense[static_cast<std::size_t>(e - lo)] = reduced;
  }
  return build(lo, std::move(dense), known_order);
}

OmegaNumber OmegaNumber::from_dense(Exponent first_exponent, std::vector<Rational> coeffs, Exponent known_order) {
  for (auto& c : coeffs) c.canonicalize();
  return build(first_exponent, std::move(coeffs), known_order);
}

Exponent OmegaNumber::last_exponent() const noexcept {
  return valuation_ + static_cast<Exponent>(coeffs_.size()) - 1;
}

Rational OmegaNumber::coefficient(Exponent e) const {
  if (e > known_order_)
    throw OrderExceedsKnown("coefficient of " + monomial_string(e) + " is beyond the known order " +
                            std::to_string(known_order_));
  if (is_zero() || e < valuation_ || e > last_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

Exponent OmegaNumber::effective_valuation() const noexcept {
  if (!is_zero()) return valuation_;
  return known_order_ == kExact ? kExact : known_order_ + 1;
}

int OmegaNumber::sign() const {
  if (!is_zero()) return sgn(coeffs_.front());
  if (is_exact()) return 0;
  throw IndistinguishableAtTruncation("sign of " + to_string(*this) + " is not determined at this order");
}

OmegaNumber OmegaNumber::clip(Exponent n) const {
  if (n >= known_order_) return *this;
  std::vector<Rational> copy = coeffs_;
  return build(valuation_, std::move(copy), n);
}

OmegaNumber OmegaNumber::shifted(Exponent shift) const {
  OmegaNumber r = *this;
  if (!r.is_zero()) r.valuation_ += shift;
  r.known_order_ = order_add(known_order_, shift);
  return r;
}

OmegaNumber OmegaNumber::operator-() const {
  OmegaNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OmegaNumber operator+(const OmegaNumber& x, const OmegaNumber& y) {
  const Exponent known = std::min(x.known_order_, y.known_order_);
  if (x.is_zero()) return y.clip(known);
  if (y.is_zero()) return x.clip(known);
  const Exponent lo = std::min(x.valuation_, y.valuation_);
  Exponent hi = std::max(x.last_exponent(), y.last_exponent());
  if (known != kExact) hi = std::min(hi, known);
  if (hi < lo) return OmegaNumber::unknown(known);
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    const Exponent e = x.valuation_ + static_cast<Exponent>(i);
    if (e > hi) break;
    dense[static_cast<std::size_t>(e - lo)] += x.coeffs_[i];
  }
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) {
    const Exponent e = y.valuation_ + static_cast<Exponent>(i);
    if (e > hi) break;
    dense[static_cast<std::size_t>(e - lo)] += y.coeffs_[i];
  }
  return OmegaNumber::build(lo, std::move(dense), known);
}

OmegaNumber operator-(const OmegaNumber& x, const OmegaNumber& y) { return x + (-y); }

OmegaNumber operator*(const OmegaNumber& x, const OmegaNumber& y) {
  if (x.is_exact_zero() || y.is_exact_zero()) return OmegaNumber();
  const Exponent vx = x.effective_valuation();
  const Exponent vy = y.effective_valuation();
  const Exponent known = std::min(order_add(x.known_order_, vy), order_add(y.known_order_, vx));
  if (x.is_zero() || y.is_zero()) return OmegaNumber::unknown(known);
  const Exponent lo = vx + vy;
  if (known < lo)
    throw TruncationUnderflow("product of " + to_string(x) + " and " + to_string(y) + " has no known term");
  Exponent hi = x.last_exponent() + y.last_exponent();
  if (known != kExact) hi = std::min(hi, known);
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      const std::size_t slot = i + j;
      if (static_cast<Exponent>(slot) > hi - lo) break;
      dense[slot] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return OmegaNumber::build(lo, std::move(dense), known);
}

std::optional<Exponent> ord(const OmegaNumber& x) {
  if (!x.is_zero()) return x.valuation();
  if (x.is_exact()) return std::nullopt;
  throw IndistinguishableAtTruncation("ord of " + to_string(x) + " is not determined at this order");
}

Rational standard_part(const OmegaNumber& x) {
  if (!x.is_zero() && x.valuation() < 0)
    throw NotInRo("standard part requested for the infinite number " + to_string(x));
  return x.coefficient(0);
}

OmegaNumber infinitesimal_part(const OmegaNumber& x) { return x - OmegaNumber(standard_part(x)); }

OmegaNumber truncate(const OmegaNumber& x, Exponent n) {
  if (n > x.known_order())
    throw OrderExceedsKnown("cannot truncate " + to_string(x) + " at order " + std::to_string(n));
  return x.clip(n);
}

OmegaNumber invert(const OmegaNumber& x, Exponent order) {
  if (x.is_exact_zero()) throw DivisionByZero("inverse of 0");
  if (x.is_zero()) throw TruncationUnderflow("inverse of " + to_string(x) + ": no known nonzero coefficient");
  const Exponent v = x.valuation();
  const auto& c = x.coefficients();
  if (c.size() == 1 && x.is_exact()) return OmegaNumber::monomial(1 / c.front(), -v);

  // x = c0 o^v (1 + u); the inverse is (1/c0) o^-v sum (-u)^k.
  Exponent target = order;
  if (!x.is_exact()) target = std::min(target, x.known_order() - 2 * v);
  if (target < -v)
    throw TruncationUnderflow("inverse of " + to_string(x) + " has no term at or below order " +
                              std::to_string(target));
  const auto terms = static_cast<std::size_t>(target + v + 1);
  std::vector<Rational> b(terms);
  const Rational lead_inv = 1 / c.front();
  b[0] = lead_inv;
  for (std::size_t j = 1; j < terms; ++j) {
    Rational acc = 0;
    const std::size_t top = std::min(j, c.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) acc += c[i] * b[j - i];
    b[j] = -lead_inv * acc;
  }
  return OmegaNumber::from_dense(-v, std::move(b), target);
}

OmegaNumber divide(const OmegaNumber& x, const OmegaNumber& y, Exponent order) {
  if (y.is_exact_zero()) throw DivisionByZero("division of " + to_string(x) + " by 0");
  if (x.is_exact_zero()) return OmegaNumber();
  const Exponent vx = x.effective_valuation();
  const Exponent vy = y.is_zero() ? 0 : y.valuation();
  const OmegaNumber quotient = x * invert(y, std::max(order - vx, -vy));
  return quotient.is_exact() ? quotient : quotient.clip(order);
}

std::strong_ordering compare(const OmegaNumber& x, const OmegaNumber& y) {
  const OmegaNumber d = x - y;
  if (!d.is_zero()) return d.coefficients().front() > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  if (d.is_exact()) return std::strong_ordering::equal;
  throw IndistinguishableAtTruncation(to_string(x) + " and " + to_string(y) + " agree up to o^" +
                                      std::to_string(d.known_order()));
}

bool much_less(const OmegaNumber& x, const OmegaNumber& y) {
  auto undecided = [&] {
    return IndistinguishableAtTruncation("cannot decide " + to_string(x) + " << " + to_string(y) +
                                         " at this order");
  };
  if (y.is_exact_zero()) return false;
  if (x.is_exact_zero()) {
    if (y.is_zero()) throw undecided();
    return true;
  }
  if (x.is_zero()) {
    if (y.is_zero()) throw undecided();
    if (x.known_order() + 1 > y.valuation()) return true;
    throw undecided();
  }
  if (y.is_zero()) {
    if (x.valuation() <= y.known_order() + 1) return false;
    throw undecided();
  }
  return x.valuation() > y.valuation();
}

OmegaNumber pow_rational(const OmegaNumber& x, const Rational& alpha, Exponent order) {
  if (alpha == 0) return OmegaNumber(1);
  if (x.is_exact_zero()) {
    if (alpha < 0) throw DivisionByZero("0 raised to a negative power");
    return OmegaNumber();
  }
  if (x.is_zero()) throw TruncationUnderflow("power of " + to_string(x) + ": no known nonzero coefficient");

  if (is_integer(alpha)) {
    const long n = alpha.get_num().get_si();
    OmegaNumber base = x;
    OmegaNumber acc(1);
    for (unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n); e != 0; e >>= 1) {
      if (e & 1U) acc *= base;
      if (e > 1) base *= base;
    }
    if (n < 0) return invert(acc, order);
    return acc.is_exact() ? acc : acc.clip(order);
  }

  const Exponent v = x.valuation();
  const Rational lead = x.coefficients().front();
  if (v > 0 && alpha < 0)
    throw DomainError("negative non-integer power of the infinitesimal " + to_string(x));
  if (lead < 0) throw DomainError("non-integer power of the negative number " + to_string(x));
  const Rational scaled_exponent = alpha * Rational(v);
  if (!is_integer(scaled_exponent))
    throw NonRepresentableBase("o^" + to_string(scaled_exponent) + " is not a Laurent monomial");
  const auto lead_power = rational_power(lead, alpha);
  if (!lead_power) throw NonRepresentableBase(to_string(lead) + "^" + to_string(alpha) + " is irrational");
  const Exponent out_valuation = scaled_exponent.get_num().get_si();

  // x = lead * o^v * (1 + u) with u infinitesimal; u is in relative exponents.
  const OmegaNumber normalized = x.shifted(-v) * OmegaNumber(1 / lead);
  const OmegaNumber u = normalized - OmegaNumber(1);
  Exponent relative = order - out_valuation;
  if (!u.is_exact()) relative = std::min(relative, u.known_order());
  if (u.is_exact_zero()) return OmegaNumber::monomial(*lead_power, out_valuation);

  OmegaNumber sum(1);
  OmegaNumber power(1);
  for (Exponent k = 1; k <= relative; ++k) {
    power = (power * u).clip(relative);
    if (power.is_zero()) break;
    sum += OmegaNumber(generalized_binomial(alpha, static_cast<unsigned long>(k))) * power;
  }
  sum = sum.clip(relative);
  return (sum * OmegaNumber(*lead_power)).shifted(out_valuation);
}

std::string monomial_string(Exponent e) {
  if (e == 0) return "";
  if (e == 1) return "o";
  if (e == -1) return "S";
  if (e > 0) return "o^" + std::to_string(e);
  return "S^" + std::to_string(-e);
}

namespace {

void append_term(std::string& out, const Rational& c, const std::string& mono) {
  const bool negative = c < 0;
  const Rational magnitude = negative ? Rational(-c) : c;
  std::string body;
  if (mono.empty()) {
    body = to_string(magnitude);
  } else if (magnitude == 1) {
    body = mono;
  } else {
    body = to_string(magnitude) + "*" + mono;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::string big_o(Exponent known_order) {
  const std::string mono = monomial_string(known_order + 1);
  return "O(" + (mono.empty() ? std::string("1") : mono) + ")";
}

std::string render_terms(const OmegaNumber& x) {
  std::string out;
  const auto& c = x.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    append_term(out, c[i], monomial_string(x.valuation() + static_cast<Exponent>(i)));
  }
  return out;
}

}  // namespace

std::string to_string(const OmegaNumber& x) {
  std::string out = render_terms(x);
  if (!x.is_exact()) {
    out += out.empty() ? big_o(x.known_order()) : " + " + big_o(x.known_order());
  }
  return out.empty() ? "0" : out;
}

ExtendedOmega::ExtendedOmega(OmegaNumber finite) : prefix_(std::move(finite)) {}

ExtendedOmega ExtendedOmega::with_infinite_moment(const OmegaNumber& prefix, Exponent position, int sign) {
  if (position < 1) throw DomainError("infinite moments sit at o^k with k >= 1");
  if (sign != 1 && sign != -1) throw DomainError("infinite moment sign must be +1 or -1");
  if (prefix.known_order() < position - 1)
    throw OrderExceedsKnown("prefix " + to_string(prefix) + " is not known up to o^" + std::to_string(position - 1));
  ExtendedOmega r;
  std::map<Exponent, Rational> kept;
  const auto& c = prefix.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Exponent e = prefix.valuation() + static_cast<Exponent>(i);
    if (e >= position) break;
    kept[e] = c[i];
  }
  r.prefix_ = OmegaNumber::normalize(kept);
  r.moment_ = InfiniteMoment{position, sign};
  return r;
}

std::strong_ordering compare_extended(const ExtendedOmega& x, const ExtendedOmega& y) {
  const auto& mx = x.infinite_moment();
  const auto& my = y.infinite_moment();
  if (!mx && !my) return compare(x.prefix(), y.prefix());

  Exponent lo = kExact;
  Exponent hi = std::numeric_limits<Exponent>::min();
  for (const ExtendedOmega* v : {&x, &y}) {
    if (!v->prefix().is_zero()) lo = std::min(lo, v->prefix().valuation());
    if (v->infinite_moment()) {
      lo = std::min(lo, v->infinite_moment()->position);
      hi = std::max(hi, v->infinite_moment()->position);
    }
  }
  // Each side's coefficient at o^e: -2/+2 encode -inf/+inf, 0 a finite value.
  auto rank = [](const ExtendedOmega& v, Exponent e, Rational& finite) {
    if (v.infinite_moment() && v.infinite_moment()->position == e) return 2 * v.infinite_moment()->sign;
    if (v.infinite_moment() && e > v.infinite_moment()->position) {
      finite = 0;
      return 0;
    }
    finite = v.prefix().coefficient(e);
    return 0;
  };
  for (Exponent e = lo; e <= hi; ++e) {
    Rational fx, fy;
    int rx = 0, ry = 0;
    try {
      rx = rank(x, e, fx);
      ry = rank(y, e, fy);
    } catch (const OrderExceedsKnown&) {
      throw IndistinguishableAtTruncation("comparison of extended numbers needs o^" + std::to_string(e) +
                                          " which is beyond the known order");
    }
    if (rx != ry) return rx < ry ? std::strong_ordering::less : std::strong_ordering::greater;
    if (rx != 0) return std::strong_ordering::equal;
    if (fx != fy) return fx < fy ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ExtendedOmega sup_finite(const std::vector<ExtendedOmega>& set) {
  if (set.empty()) throw DomainError("supremum of an empty set");
  const ExtendedOmega* best = &set.front();
  for (const auto& candidate : set)
    if (compare_extended(candidate, *best) == std::strong_ordering::greater) best = &candidate;
  return *best;
}

std::string to_string(const ExtendedOmega& x) {
  if (!x.infinite_moment()) return to_string(x.prefix());
  std::string out = render_terms(x.prefix());
  const auto& m = *x.infinite_moment();
  const std::string body = "inf*" + monomial_string(m.position);
  if (out.empty()) return (m.sign < 0 ? "-" : "") + body;
  return out + (m.sign < 0 ? " - " : " + ") + body;
}

OmegaNumber cauchy_limit(const std::function<OmegaNumber(std::size_t)>& gen, Exponent n, std::size_t budget,
                         std::size_t stable_run) {
  std::optional<OmegaNumber> previous;
  std::size_t run = 0;
  for (std::size_t p = 0; p < budget; ++p) {
    const OmegaNumber term = gen(p);
    if (term.known_order() < n) {
      previous.reset();
      run = 0;
      continue;
    }
    OmegaNumber current = term.clip(n);
    if (previous && *previous == current) {
      ++run;
    } else {
      previous = std::move(current);
      run = 1;
    }
    if (run >= stable_run) return *previous;
  }
  throw NoStabilization("moments up to o^" + std::to_string(n) + " did not settle within " +
                        std::to_string(budget) + " terms");
}

}  // namespace omega
