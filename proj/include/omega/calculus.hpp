#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "omega/regular_function.hpp"

namespace omega {

/// Memoized exact coefficient tables shared by the calculus operators.
///
/// Indices are bounded by `max_order` (IndexOutOfRange past it). Tables only
/// grow; concurrent readers are allowed.
class CoeffTables {
 public:
  explicit CoeffTables(std::size_t max_order = 32) : max_order_(max_order) {}

  /// Process-wide instance with the default bound.
  static CoeffTables& shared();

  std::size_t max_order() const noexcept { return max_order_; }

  Integer binomial(std::size_t p, std::size_t k) const;
  /// B_p under the convention fitted against a_{m,l} (B_1 = -1/2).
  Rational bernoulli(std::size_t p);
  /// X_p^n = sum_k (-1)^(p-k) C(p,k) k^n.
  Integer X(std::size_t p, std::size_t n);
  /// K_{p-1}^{r}: sum of all products of r distinct factors from {1, ..., p-1}.
  Integer K(std::size_t p_minus_1, std::size_t r);
  /// a_{m,l}, 1 <= l <= m+1, by inverting the binomial matrix.
  Rational A(std::size_t m, std::size_t l);
  /// a_{m,l} from the Bernoulli closed form.
  Rational A_closed_form(std::size_t m, std::size_t l);
  /// a^{(p)}_{m,l}, 1 <= l <= m+p.
  Rational Ap(std::size_t p, std::size_t m, std::size_t l);

  /// Sign of B_1 for which the closed form reproduces the matrix route.
  int fitted_b1_sign();

 private:
  void check_index(std::size_t i, const char* what) const;
  const std::vector<Rational>& a_row(std::size_t m);
  const std::vector<Rational>& ap_row(std::size_t p, std::size_t m);
  Rational closed_form_with(std::size_t m, std::size_t l, const Rational& b1);

  std::size_t max_order_;
  std::shared_mutex mutex_;
  std::vector<Rational> bernoulli_;  // B_1 = -1/2 recurrence values
  std::map<std::pair<std::size_t, std::size_t>, Integer> x_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> k_;
  std::map<std::size_t, std::vector<Rational>> a_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> ap_;
  int b1_sign_ = 0;
};

/// D^p F(x) = sum_k (-1)^(p-k) C(p,k) F(x + k o).
OmegaNumber finite_difference(const RegularFunction& f, const OmegaNumber& x, std::size_t p, Exponent order);
/// D^p F(x) by p nested differences; agrees with finite_difference.
OmegaNumber finite_difference_iterated(const RegularFunction& f, const OmegaNumber& x, std::size_t p, Exponent order);

/// d^n F(x) = F^(n)(x) o^n.
OmegaNumber leibniz_differential(const RegularFunction& f, const OmegaNumber& x, std::size_t n, Exponent order);

/// Coefficients of d^n in D^p, for n = p .. max_n.
std::vector<Rational> d_to_D(std::size_t p, std::size_t max_n, CoeffTables& tables = CoeffTables::shared());
/// Coefficients of D^p in d^n, for p = n .. max_p.
std::vector<Rational> D_to_d(std::size_t n, std::size_t max_p, CoeffTables& tables = CoeffTables::shared());

Rational bernoulli(std::size_t p);
Rational a_coeff(std::size_t m, std::size_t l);
Rational a_coeff_p(std::size_t p, std::size_t m, std::size_t l);

/// q_m^(p)(x) = sum_l a^(p)_{m,l} x^l o^(m+p-l): D^p q = x^m o^p with D^k q(0) = 0 for k < p.
RegularFunction monomial_primitive(std::size_t m, std::size_t p = 1);

/// The primitive G with G(t0) = a0 and G(x+o) - G(x) = F(x) o.
RegularFunction integrate(const RegularFunction& f, const OmegaNumber& a0);

/// Literal grid sum: sum_{n<k} F(t + n o) o, or -sum_{j=1}^{|k|} F(t - j o) o for k < 0.
OmegaNumber brute_sum(const RegularFunction& f, const Rational& t, long k, Exponent order);

/// (G(x+o) - G(x)) / o = G' + G'' o / 2 + ...
RegularFunction D_op(const RegularFunction& g);
/// The primitive vanishing at the base point.
RegularFunction S_op(const RegularFunction& f);

/// u (u - o) ... (u - (k-1) o) / k! around base point t0, u = x - t0.
RegularFunction grid_binomial(std::size_t k, const Rational& base_point = 0);

/// G with D^p G = F o^p and D^k G(t0) = C_k o^k for k < p.
RegularFunction solve_ode(const RegularFunction& f, std::size_t p, const std::vector<OmegaNumber>& initial);

}  // namespace omega
