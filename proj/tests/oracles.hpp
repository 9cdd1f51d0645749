#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's tables or calculus operators.

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

/// Stirling numbers of the second kind by the recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline Z stirling2(unsigned n, unsigned k) {
  std::vector<std::vector<Z>> s(n + 1, std::vector<Z>(k + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= k && j <= i; ++j) s[i][j] = Z(j) * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline Z factorial(unsigned n) {
  Z r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Z choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  Z r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Sum over all r-element subsets of {1..n} of the product of their elements, by enumeration.
inline Z elementary_symmetric_bruteforce(unsigned n, unsigned r) {
  Z total = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != r) continue;
    Z product = 1;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1U << i)) product *= (i + 1);
    total += product;
  }
  return total;
}

/// Bernoulli numbers with B_1 = +1/2 by the Akiyama-Tanigawa algorithm.
inline std::vector<Q> bernoulli_akiyama_tanigawa(unsigned n) {
  std::vector<Q> out;
  std::vector<Q> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Q(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = Q(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

/// Multiplies polynomials with rational coefficients.
inline std::vector<Q> poly_mul(const std::vector<Q>& a, const std::vector<Q>& b) {
  std::vector<Q> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Monomial coefficients of C(x, j) = x (x-1) ... (x-j+1) / j!.
inline std::vector<Q> binomial_polynomial(unsigned j) {
  std::vector<Q> p{Q(1)};
  for (unsigned i = 0; i < j; ++i) p = poly_mul(p, {Q(-static_cast<long>(i)), Q(1)});
  for (auto& c : p) c /= Q(factorial(j));
  return p;
}

/// Q(x) = sum_i S2(m,i) i! C(x, i+p): the unique polynomial with Delta^p Q = x^m
/// and Delta^k Q(0) = 0 for k < p (unit step). Index l holds a^(p)_{m,l}.
inline std::vector<Q> order_p_primitive(unsigned m, unsigned p) {
  std::vector<Q> total(m + p + 1);
  for (unsigned i = 0; i <= m; ++i) {
    const Q weight = Q(stirling2(m, i) * factorial(i));
    if (weight == 0) continue;
    const auto basis = binomial_polynomial(i + p);
    for (std::size_t l = 0; l < basis.size(); ++l) total[l] += weight * basis[l];
  }
  return total;
}

/// sum_{n<k} n^m as an exact integer.
inline Z power_sum(unsigned m, unsigned k) {
  Z total = 0;
  for (unsigned n = 0; n < k; ++n) {
    Z term;
    mpz_ui_pow_ui(term.get_mpz_t(), n, m);
    total += term;
  }
  return total;
}

}  // namespace oracle
