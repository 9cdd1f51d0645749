#include "omega/regular_function.hpp"

#include <mutex>
#include <stdexcept>

namespace omega {

struct RegularFunction::Memo {
  std::mutex mutex;
  std::vector<std::optional<OmegaNumber>> cache;
  CoefficientStream stream;
};

namespace {

bool covers(const OmegaNumber& value, Exponent order) { return value.is_exact() || value.known_order() >= order; }

Rational falling_factorial_ratio(std::size_t n, std::size_t q) {
  Integer acc = 1;
  for (std::size_t i = n + 1; i <= n + q; ++i) acc *= static_cast<unsigned long>(i);
  return Rational(acc);
}

Rational inverse_factorial(std::size_t n) { return Rational(1) / Rational(factorial(n)); }

}  // namespace

RegularFunction::RegularFunction(std::string name, Rational base_point, CoefficientStream stream, Options options)
    : name_(std::move(name)), base_point_(std::move(base_point)), options_(std::move(options)),
      memo_(std::make_shared<Memo>()) {
  memo_->stream = std::move(stream);
}

RegularFunction RegularFunction::polynomial(std::string name, Rational base_point, std::vector<OmegaNumber> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_exact_zero()) coeffs.pop_back();
  Options options;
  options.degree = coeffs.empty() ? 0 : coeffs.size() - 1;
  for (const auto& c : coeffs)
    if (!c.is_zero()) options.coefficient_floor = std::min(options.coefficient_floor, c.valuation());
  auto shared = std::make_shared<const std::vector<OmegaNumber>>(std::move(coeffs));
  return RegularFunction(
      std::move(name), std::move(base_point),
      [shared](std::size_t n, Exponent) { return n < shared->size() ? (*shared)[n] : OmegaNumber(); }, options);
}

OmegaNumber RegularFunction::coeff(std::size_t n, Exponent order) const {
  if (options_.degree && n > *options_.degree) return OmegaNumber();
  {
    std::lock_guard lock(memo_->mutex);
    if (n < memo_->cache.size() && memo_->cache[n] && covers(*memo_->cache[n], order)) return *memo_->cache[n];
  }
  OmegaNumber value = memo_->stream(n, order);
  std::lock_guard lock(memo_->mutex);
  if (memo_->cache.size() <= n) memo_->cache.resize(n + 1);
  auto& slot = memo_->cache[n];
  if (!slot || (!slot->is_exact() && (value.is_exact() || value.known_order() > slot->known_order()))) slot = value;
  return value;
}

OmegaNumber eval_infinitesimal(const RegularFunction& f, const OmegaNumber& u, Exponent order) {
  if (u.is_exact_zero()) {
    const OmegaNumber a0 = f.coeff(0, order);
    return a0.is_exact() ? a0 : a0.clip(order);
  }
  const Exponent vu = u.effective_valuation();
  const bool polynomial = f.degree().has_value();
  if (vu < 1 && !polynomial)
    throw NotInfinitesimal("cannot evaluate " + f.name() + " at displacement " + to_string(u) +
                           " from its base point " + to_string(f.base_point()));

  // Term k has valuation at least floor + k * vu.
  long long last = -1;
  if (polynomial && vu < 1) {
    last = static_cast<long long>(*f.degree());
  } else {
    const Exponent room = order - f.coefficient_floor();
    last = room < 0 ? -1 : room / vu;
    if (polynomial) last = std::min(last, static_cast<long long>(*f.degree()));
  }
  const bool complete = polynomial && last == static_cast<long long>(*f.degree());

  OmegaNumber sum;
  OmegaNumber power(1);
  for (long long k = 0; k <= last; ++k) {
    sum += f.coeff(static_cast<std::size_t>(k), order - static_cast<Exponent>(k) * vu) * power;
    if (k < last) {
      power *= u;
      if (!complete) power = power.clip(order - f.coefficient_floor());
    }
  }
  if (!complete || !sum.is_exact()) sum = sum.clip(order);
  return sum;
}

OmegaNumber eval(const RegularFunction& f, const OmegaNumber& x, Exponent order) {
  return eval_infinitesimal(f, x - OmegaNumber(f.base_point()), order);
}

RegularFunction derivative(const RegularFunction& f, std::size_t q) {
  if (q == 0) return f;
  RegularFunction::Options options = f.options();
  if (options.degree) options.degree = *options.degree >= q ? *options.degree - q : 0;
  const bool vanishes = f.degree() && *f.degree() < q;
  return RegularFunction(
      "deriv^" + std::to_string(q) + "[" + f.name() + "]", f.base_point(),
      [f, q, vanishes](std::size_t n, Exponent order) {
        if (vanishes) return OmegaNumber();
        return OmegaNumber(falling_factorial_ratio(n, q)) * f.coeff(n + q, order);
      },
      options);
}

RegularFunction taylor_shift(const RegularFunction& f, const OmegaNumber& v) {
  if (!v.is_exact_zero() && v.effective_valuation() < 1 && !f.degree())
    throw NotInfinitesimal("shift " + to_string(v) + " is not infinitesimal");
  RegularFunction::Options options = f.options();
  if (!v.is_zero() && v.valuation() < 0 && options.degree)
    options.coefficient_floor += static_cast<Exponent>(*options.degree) * v.valuation();
  return RegularFunction(
      f.name() + "(x + " + to_string(v) + ")", f.base_point(),
      [f, v](std::size_t q, Exponent order) {
        return eval_infinitesimal(derivative(f, q), v, order) * OmegaNumber(inverse_factorial(q));
      },
      options);
}

RegularFunction builtin(const std::string& name, const Rational& base_point) {
  auto at_zero_only = [&] {
    if (base_point != 0)
      throw UnsupportedBasePoint(name + " has irrational Taylor coefficients at " + to_string(base_point));
  };
  RegularFunction::Options options;
  if (name == "exp") {
    at_zero_only();
    return RegularFunction(name, 0, [](std::size_t n, Exponent) { return OmegaNumber(inverse_factorial(n)); },
                           options);
  }
  if (name == "sin" || name == "cos") {
    at_zero_only();
    const std::size_t parity = name == "sin" ? 1 : 0;
    return RegularFunction(
        name, 0,
        [parity](std::size_t n, Exponent) {
          if (n % 2 != parity) return OmegaNumber();
          const bool negative = ((n - parity) / 2) % 2 == 1;
          const Rational c = inverse_factorial(n);
          return OmegaNumber(negative ? Rational(-c) : c);
        },
        options);
  }
  if (name == "log") {
    if (base_point != 1) throw UnsupportedBasePoint("log is only available at base point 1");
    options.radius = 1;
    return RegularFunction(
        name, 1,
        [](std::size_t n, Exponent) {
          if (n == 0) return OmegaNumber();
          return OmegaNumber(make_rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n)));
        },
        options);
  }
  if (name == "geom") {
    if (base_point == 1) throw UnsupportedBasePoint("1/(1-x) has a pole at 1");
    const Rational r = 1 / (1 - base_point);
    options.radius = Rational(abs(1 - base_point));
    return RegularFunction(name, base_point, [r](std::size_t n, Exponent) {
      return OmegaNumber(pow_int(r, static_cast<long>(n) + 1));
    }, options);
  }
  if (name == "id") return RegularFunction::polynomial(name, base_point, {OmegaNumber(base_point), OmegaNumber(1)});
  throw DomainError("unknown function '" + name + "'");
}

RegularFunction builtin_pow(const Rational& alpha, const Rational& base_point) {
  const std::string name = "pow[" + to_string(alpha) + "]";
  if (is_integer(alpha) && alpha >= 0) {
    auto f = monomial_function(alpha.get_num().get_ui(), base_point);
    return RegularFunction(name, base_point, [f](std::size_t n, Exponent order) { return f.coeff(n, order); },
                           f.options());
  }
  if (base_point <= 0)
    throw UnsupportedBasePoint(name + " needs a positive base point, got " + to_string(base_point));
  const auto lead = rational_power(base_point, alpha);
  if (!lead) throw UnsupportedBasePoint(to_string(base_point) + "^" + to_string(alpha) + " is irrational");
  RegularFunction::Options options;
  options.radius = base_point;
  const Rational scale = *lead;
  const Rational inv_t = 1 / base_point;
  return RegularFunction(name, base_point, [alpha, scale, inv_t](std::size_t n, Exponent) {
    return OmegaNumber(scale * generalized_binomial(alpha, n) * pow_int(inv_t, static_cast<long>(n)));
  }, options);
}

RegularFunction monomial_function(std::size_t m, const Rational& base_point) {
  std::vector<OmegaNumber> c(m + 1);
  for (std::size_t n = 0; n <= m; ++n)
    c[n] = OmegaNumber(Rational(binomial(m, n)) * pow_int(base_point, static_cast<long>(m - n)));
  return RegularFunction::polynomial("p" + std::to_string(m), base_point, std::move(c));
}

RegularFunction constant_function(const OmegaNumber& c, const Rational& base_point) {
  return RegularFunction::polynomial(to_string(c), base_point, {c});
}

NsStarReport ns_star_check(const PointMap& f, const std::vector<std::pair<OmegaNumber, OmegaNumber>>& samples) {
  NsStarReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [x1, x2] = samples[i];
    const OmegaNumber dx = x2 - x1;
    const OmegaNumber df = f(x2) - f(x1);
    ++report.pairs_checked;
    if (much_less(dx, df)) {
      report.passed = false;
      report.counterexample = i;
      report.detail = "|x2 - x1| = |" + to_string(dx) + "| << |F(x2) - F(x1)| = |" + to_string(df) + "| at x1 = " +
                      to_string(x1) + ", x2 = " + to_string(x2);
      return report;
    }
  }
  return report;
}

std::vector<std::pair<OmegaNumber, OmegaNumber>> canonical_ns_star_samples() {
  const OmegaNumber o = OmegaNumber::o();
  const std::vector<OmegaNumber> standard = {OmegaNumber(), OmegaNumber(1), OmegaNumber(-2),
                                             OmegaNumber(make_rational(1, 2)), OmegaNumber(3)};
  const std::vector<OmegaNumber> offsets = {OmegaNumber(), o, o * o - o};
  const std::vector<OmegaNumber> steps = {o, o * o, OmegaNumber(3) * o * o * o, -(o * o), o + o * o};
  std::vector<std::pair<OmegaNumber, OmegaNumber>> pairs;
  for (const auto& t : standard)
    for (const auto& a : offsets)
      for (const auto& d : steps) pairs.emplace_back(t + a, t + a + d);
  return pairs;
}

OmegaNumber solve_lift(const RegularFunction& f, const OmegaNumber& y, const Rational& seed, Exponent order) {
  const Exponent target = std::min(order, y.known_order());
  const Rational y_standard = standard_part(y);
  const OmegaNumber at_seed = eval(f, OmegaNumber(seed), 0);
  if (standard_part(at_seed) != y_standard)
    throw SeedMismatch(f.name() + "(" + to_string(seed) + ") has standard part " + to_string(standard_part(at_seed)) +
                       ", expected " + to_string(y_standard));
  const Rational slope = standard_part(eval(derivative(f, 1), OmegaNumber(seed), 0));
  if (slope == 0) throw SingularDerivative("derivative of " + f.name() + " vanishes at " + to_string(seed));

  OmegaNumber x(seed);
  for (Exponent i = 1; i <= target; ++i) {
    const OmegaNumber residual = y - eval(f, x, i);
    if (!residual.is_zero() && residual.valuation() < i)
      throw std::logic_error("moment " + std::to_string(residual.valuation()) + " did not cancel while lifting");
    x += OmegaNumber::monomial(residual.coefficient(i) / slope, i);
  }
  return x.clip(target);
}

}  // namespace omega
