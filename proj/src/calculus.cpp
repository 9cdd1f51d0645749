#include "omega/calculus.hpp"

#include <mutex>
#include <stdexcept>

namespace omega {

namespace {

Rational inverse_factorial(std::size_t n) { return Rational(1) / Rational(factorial(n)); }

Rational sign_power(std::size_t r) { return r % 2 == 0 ? Rational(1) : Rational(-1); }

// Solves a square system exactly; the matrix must be invertible.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular coefficient system");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational factor = m[row][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  return rhs;
}

// Forward difference with unit step of a polynomial given by its coefficients.
std::vector<Rational> unit_difference(const std::vector<Rational>& poly) {
  std::vector<Rational> out(poly.size());
  for (std::size_t l = 1; l < poly.size(); ++l) {
    if (poly[l] == 0) continue;
    for (std::size_t s = 0; s < l; ++s) out[s] += poly[l] * Rational(omega::binomial(l, s));
  }
  return out;
}

}  // namespace

CoeffTables& CoeffTables::shared() {
  static CoeffTables tables;
  return tables;
}

void CoeffTables::check_index(std::size_t i, const char* what) const {
  if (i > max_order_)
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " exceeds the table bound " +
                          std::to_string(max_order_));
}

Integer CoeffTables::binomial(std::size_t p, std::size_t k) const { return omega::binomial(p, k); }

Rational CoeffTables::bernoulli(std::size_t p) {
  check_index(p, "Bernoulli");
  if (p == 1) return make_rational(fitted_b1_sign(), 2);
  {
    std::shared_lock lock(mutex_);
    if (p < bernoulli_.size()) return bernoulli_[p];
  }
  std::unique_lock lock(mutex_);
  if (bernoulli_.empty()) bernoulli_.push_back(1);
  while (bernoulli_.size() <= p) {
    const std::size_t m = bernoulli_.size();
    Rational acc = 0;
    for (std::size_t k = 0; k < m; ++k) acc += Rational(omega::binomial(m + 1, k)) * bernoulli_[k];
    bernoulli_.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return bernoulli_[p];
}

Integer CoeffTables::X(std::size_t p, std::size_t n) {
  check_index(p, "X");
  check_index(n, "X");
  {
    std::shared_lock lock(mutex_);
    if (auto it = x_.find({p, n}); it != x_.end()) return it->second;
  }
  Integer acc = 0;
  for (std::size_t k = 0; k <= p; ++k) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, n);
    const Integer term = omega::binomial(p, k) * power;
    if ((p - k) % 2 == 0) acc += term;
    else acc -= term;
  }
  std::unique_lock lock(mutex_);
  x_.emplace(std::make_pair(p, n), acc);
  return acc;
}

Integer CoeffTables::K(std::size_t p_minus_1, std::size_t r) {
  check_index(p_minus_1 + 1, "K");
  if (r > p_minus_1) return 0;
  {
    std::shared_lock lock(mutex_);
    if (auto it = k_.find({p_minus_1, r}); it != k_.end()) return it->second;
  }
  // e[j] = elementary symmetric sums of {1, ..., i}.
  std::vector<Integer> e(p_minus_1 + 1, Integer(0));
  e[0] = 1;
  for (std::size_t i = 1; i <= p_minus_1; ++i)
    for (std::size_t j = i; j >= 1; --j) e[j] += static_cast<unsigned long>(i) * e[j - 1];
  std::unique_lock lock(mutex_);
  for (std::size_t j = 0; j <= p_minus_1; ++j) k_.emplace(std::make_pair(p_minus_1, j), e[j]);
  return e[r];
}

const std::vector<Rational>& CoeffTables::a_row(std::size_t m) {
  check_index(m, "a_{m,l}");
  {
    std::shared_lock lock(mutex_);
    if (auto it = a_.find(m); it != a_.end()) return it->second;
  }
  // sum_{l>s} a_{m,l} C(l,s) = delta_{ms} for s = 0..m, solved from s = m down.
  std::vector<Rational> row(m + 2);
  for (std::size_t s = m + 1; s-- > 0;) {
    Rational acc = s == m ? Rational(1) : Rational(0);
    for (std::size_t l = s + 2; l <= m + 1; ++l) acc -= row[l] * Rational(omega::binomial(l, s));
    row[s + 1] = acc / Rational(static_cast<long>(s + 1));
  }
  std::unique_lock lock(mutex_);
  return a_.emplace(m, std::move(row)).first->second;
}

Rational CoeffTables::A(std::size_t m, std::size_t l) {
  if (l < 1 || l > m + 1)
    throw IndexOutOfRange("a_{m,l} needs 1 <= l <= m+1, got m=" + std::to_string(m) + ", l=" + std::to_string(l));
  return a_row(m)[l];
}

Rational CoeffTables::closed_form_with(std::size_t m, std::size_t l, const Rational& b1) {
  if (l < 1 || l > m + 1)
    throw IndexOutOfRange("a_{m,l} needs 1 <= l <= m+1, got m=" + std::to_string(m) + ", l=" + std::to_string(l));
  const std::size_t r = m + 1 - l;
  Rational acc = 0;
  for (std::size_t p = 0; p <= r; ++p) {
    const Rational b = p == 1 ? b1 : bernoulli(p);
    const Integer denominator = factorial(l) * factorial(p) * factorial(r - p);
    acc += Rational(factorial(m)) / Rational(denominator) * b;
  }
  return sign_power(r) * acc;
}

int CoeffTables::fitted_b1_sign() {
  {
    std::shared_lock lock(mutex_);
    if (b1_sign_ != 0) return b1_sign_;
  }
  const std::size_t top = std::min<std::size_t>(12, max_order_);
  int fitted = 0;
  for (int sign : {-1, 1}) {
    const Rational b1 = make_rational(sign, 2);
    bool all = true;
    for (std::size_t m = 0; m <= top && all; ++m)
      for (std::size_t l = 1; l <= m + 1 && all; ++l) all = closed_form_with(m, l, b1) == A(m, l);
    if (all) {
      fitted = sign;
      break;
    }
  }
  if (fitted == 0) throw std::logic_error("no Bernoulli convention reproduces the a_{m,l} table");
  std::unique_lock lock(mutex_);
  b1_sign_ = fitted;
  return fitted;
}

Rational CoeffTables::A_closed_form(std::size_t m, std::size_t l) {
  return closed_form_with(m, l, make_rational(fitted_b1_sign(), 2));
}

const std::vector<Rational>& CoeffTables::ap_row(std::size_t p, std::size_t m) {
  check_index(m + p, "a^(p)_{m,l}");
  {
    std::shared_lock lock(mutex_);
    if (auto it = ap_.find({p, m}); it != ap_.end()) return it->second;
  }
  // Unknowns a_1..a_N of Q(x) = sum a_l x^l (step 1): the x^s coefficients of
  // Delta^p Q equal [s == m], and (Delta^k Q)(0) = 0 for 1 <= k < p.
  const std::size_t n = m + p;
  std::vector<std::vector<std::vector<Rational>>> diffs(n + 1);  // diffs[l][k] = Delta^k x^l
  for (std::size_t l = 1; l <= n; ++l) {
    std::vector<Rational> poly(n + 1);
    poly[l] = 1;
    diffs[l].push_back(poly);
    for (std::size_t k = 1; k <= p; ++k) diffs[l].push_back(unit_difference(diffs[l].back()));
  }
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  for (std::size_t s = 0; s <= m; ++s) {
    std::vector<Rational> row(n);
    for (std::size_t l = 1; l <= n; ++l) row[l - 1] = diffs[l][p][s];
    matrix.push_back(std::move(row));
    rhs.push_back(s == m ? 1 : 0);
  }
  for (std::size_t k = 1; k < p; ++k) {
    std::vector<Rational> row(n);
    for (std::size_t l = 1; l <= n; ++l) row[l - 1] = diffs[l][k][0];
    matrix.push_back(std::move(row));
    rhs.push_back(0);
  }
  const auto solution = solve_linear(std::move(matrix), std::move(rhs));
  std::vector<Rational> row(n + 1);
  for (std::size_t l = 1; l <= n; ++l) row[l] = solution[l - 1];
  std::unique_lock lock(mutex_);
  return ap_.emplace(std::make_pair(p, m), std::move(row)).first->second;
}

Rational CoeffTables::Ap(std::size_t p, std::size_t m, std::size_t l) {
  if (p < 1) throw IndexOutOfRange("a^(p) needs p >= 1");
  if (l < 1 || l > m + p)
    throw IndexOutOfRange("a^(p)_{m,l} needs 1 <= l <= m+p, got m=" + std::to_string(m) + ", l=" + std::to_string(l));
  return ap_row(p, m)[l];
}

OmegaNumber finite_difference(const RegularFunction& f, const OmegaNumber& x, std::size_t p, Exponent order) {
  OmegaNumber acc;
  for (std::size_t k = 0; k <= p; ++k) {
    const OmegaNumber value = eval(f, x + OmegaNumber::monomial(static_cast<long>(k), 1), order);
    const OmegaNumber weight(sign_power(p - k) * Rational(omega::binomial(p, k)));
    acc += weight * value;
  }
  return acc.is_exact() ? acc : acc.clip(order);
}

OmegaNumber finite_difference_iterated(const RegularFunction& f, const OmegaNumber& x, std::size_t p,
                                       Exponent order) {
  std::vector<OmegaNumber> values;
  for (std::size_t k = 0; k <= p; ++k) values.push_back(eval(f, x + OmegaNumber::monomial(static_cast<long>(k), 1), order));
  for (std::size_t round = 0; round < p; ++round)
    for (std::size_t i = 0; i + 1 < values.size() - round; ++i) values[i] = values[i + 1] - values[i];
  return values.front();
}

OmegaNumber leibniz_differential(const RegularFunction& f, const OmegaNumber& x, std::size_t n, Exponent order) {
  const auto shift = static_cast<Exponent>(n);
  return eval(derivative(f, n), x, order - shift).shifted(shift);
}

std::vector<Rational> d_to_D(std::size_t p, std::size_t max_n, CoeffTables& tables) {
  if (p < 1) throw IndexOutOfRange("D^p needs p >= 1");
  std::vector<Rational> out;
  for (std::size_t n = p; n <= max_n; ++n) out.push_back(Rational(tables.X(p, n)) * inverse_factorial(n));
  return out;
}

std::vector<Rational> D_to_d(std::size_t n, std::size_t max_p, CoeffTables& tables) {
  if (n < 1) throw IndexOutOfRange("d^n needs n >= 1");
  std::vector<Rational> out;
  for (std::size_t p = n; p <= max_p; ++p)
    out.push_back(Rational(factorial(n)) * sign_power(p - n) * Rational(tables.K(p - 1, p - n)) * inverse_factorial(p));
  return out;
}

Rational bernoulli(std::size_t p) { return CoeffTables::shared().bernoulli(p); }
Rational a_coeff(std::size_t m, std::size_t l) { return CoeffTables::shared().A(m, l); }
Rational a_coeff_p(std::size_t p, std::size_t m, std::size_t l) { return CoeffTables::shared().Ap(p, m, l); }

RegularFunction monomial_primitive(std::size_t m, std::size_t p) {
  std::vector<OmegaNumber> c(m + p + 1);
  for (std::size_t l = 1; l <= m + p; ++l)
    c[l] = OmegaNumber::monomial(a_coeff_p(p, m, l), static_cast<Exponent>(m + p - l));
  std::string name = "q" + std::to_string(m);
  if (p > 1) name += "^(" + std::to_string(p) + ")";
  return RegularFunction::polynomial(name, 0, std::move(c));
}

namespace {

// Coefficient A_l of the order-p primitive of F (before initial conditions):
// sum over m of a_m a^(p)_{m,l} o^(m+p-l).
OmegaNumber primitive_coefficient(const RegularFunction& f, std::size_t p, std::size_t l, Exponent order) {
  if (l == 0) return OmegaNumber();
  const std::size_t first = l > p ? l - p : 0;
  std::size_t last = 0;
  bool bounded = f.degree().has_value();
  if (bounded) {
    last = *f.degree();
  } else {
    const Exponent room = order - f.coefficient_floor() + static_cast<Exponent>(l) - static_cast<Exponent>(p);
    if (room < static_cast<Exponent>(first)) return OmegaNumber::unknown(order);
    last = static_cast<std::size_t>(room);
  }
  OmegaNumber acc;
  for (std::size_t m = first; m <= last; ++m) {
    const auto weight = static_cast<Exponent>(m + p - l);
    const Rational a = a_coeff_p(p, m, l);
    if (a == 0) continue;
    acc += f.coeff(m, order - weight) * OmegaNumber::monomial(a, weight);
  }
  return bounded && acc.is_exact() ? acc : acc.clip(order);
}

RegularFunction::Options primitive_options(const RegularFunction& f, std::size_t p) {
  RegularFunction::Options options = f.options();
  if (options.degree) options.degree = *options.degree + p;
  return options;
}

}  // namespace

RegularFunction integrate(const RegularFunction& f, const OmegaNumber& a0) {
  RegularFunction::Options options = primitive_options(f, 1);
  if (!a0.is_zero()) options.coefficient_floor = std::min(options.coefficient_floor, a0.valuation());
  return RegularFunction(
      "int[" + f.name() + "]", f.base_point(),
      [f, a0](std::size_t l, Exponent order) {
        if (l == 0) return a0;
        return primitive_coefficient(f, 1, l, order);
      },
      options);
}

OmegaNumber brute_sum(const RegularFunction& f, const Rational& t, long k, Exponent order) {
  const OmegaNumber start(t);
  OmegaNumber acc;
  if (k >= 0) {
    for (long n = 0; n < k; ++n) acc += eval(f, start + OmegaNumber::monomial(n, 1), order - 1);
  } else {
    for (long j = 1; j <= -k; ++j) acc -= eval(f, start - OmegaNumber::monomial(j, 1), order - 1);
  }
  return acc * OmegaNumber::o();
}

RegularFunction D_op(const RegularFunction& g) {
  RegularFunction::Options options = g.options();
  if (options.degree) options.degree = *options.degree > 0 ? *options.degree - 1 : 0;
  return RegularFunction(
      "D[" + g.name() + "]", g.base_point(),
      [g](std::size_t j, Exponent order) {
        // f_j = sum_{n > j} g_n C(n, j) o^(n-j-1).
        std::size_t last = 0;
        const bool bounded = g.degree().has_value();
        if (bounded) {
          if (*g.degree() <= j) return OmegaNumber();
          last = *g.degree();
        } else {
          const Exponent room = order - g.coefficient_floor() + static_cast<Exponent>(j) + 1;
          if (room <= static_cast<Exponent>(j)) return OmegaNumber::unknown(order);
          last = static_cast<std::size_t>(room);
        }
        OmegaNumber acc;
        for (std::size_t n = j + 1; n <= last; ++n) {
          const auto weight = static_cast<Exponent>(n - j - 1);
          acc += g.coeff(n, order - weight) * OmegaNumber::monomial(Rational(omega::binomial(n, j)), weight);
        }
        return bounded && acc.is_exact() ? acc : acc.clip(order);
      },
      options);
}

RegularFunction S_op(const RegularFunction& f) { return integrate(f, OmegaNumber()); }

RegularFunction grid_binomial(std::size_t k, const Rational& base_point) {
  // Coefficients of prod_{i<k} (u - i o) / k! in powers of u.
  std::vector<OmegaNumber> c{OmegaNumber(inverse_factorial(k))};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<OmegaNumber> next(c.size() + 1);
    const OmegaNumber root = OmegaNumber::monomial(static_cast<long>(i), 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= root * c[j];
    }
    c = std::move(next);
  }
  return RegularFunction::polynomial("B" + std::to_string(k), base_point, std::move(c));
}

RegularFunction solve_ode(const RegularFunction& f, std::size_t p, const std::vector<OmegaNumber>& initial) {
  if (p < 1) throw DomainError("order p must be at least 1");
  if (initial.size() != p)
    throw DomainError("order " + std::to_string(p) + " needs " + std::to_string(p) + " initial values, got " +
                      std::to_string(initial.size()));
  std::vector<RegularFunction> basis;
  for (std::size_t k = 0; k < p; ++k) basis.push_back(grid_binomial(k, f.base_point()));

  RegularFunction::Options options = primitive_options(f, p);
  if (options.degree) options.degree = std::max(*options.degree, p - 1);
  for (const auto& c : initial)
    if (!c.is_zero()) options.coefficient_floor = std::min(options.coefficient_floor, c.valuation());
  return RegularFunction(
      "ode" + std::to_string(p) + "[" + f.name() + "]", f.base_point(),
      [f, p, initial, basis](std::size_t l, Exponent order) {
        OmegaNumber acc = primitive_coefficient(f, p, l, order);
        for (std::size_t k = 0; k < p; ++k)
          if (!initial[k].is_exact_zero()) acc += initial[k] * basis[k].coeff(l, order);
        return acc;
      },
      options);
}

}  // namespace omega
