#pragma once

#include <compare>
#include <string>
#include <vector>

#include "omega/omega_number.hpp"

namespace omega {

// Nonstandard integer sum_k a_k Sigma^k with an integer constant term.
class AlephInt {
 public:
  AlephInt() = default;
  AlephInt(long n);                  // NOLINT(google-explicit-constructor)
  AlephInt(const Integer& n);        // NOLINT(google-explicit-constructor)

  // coeffs[k] multiplies Sigma^k. Throws DomainError if coeffs[0] is not an integer.
  static AlephInt from_coefficients(std::vector<Rational> coeffs);
  static AlephInt sigma();
  // Exact values made only of Sigma powers and an integer constant; OutOfDomain otherwise.
  static AlephInt from_omega(const OmegaNumber& x);

  // Highest Sigma power (0 for standard integers).
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  OmegaNumber to_omega() const;

  friend bool operator==(const AlephInt&, const AlephInt&) = default;

 private:
  std::vector<Rational> coeffs_;  // trailing zeros stripped
};

// Grid point t + k*o of R_o^1.
struct GridPoint {
  Rational t;
  Integer k;

  OmegaNumber to_omega() const;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

AlephInt successor(const AlephInt& l);
// Throws PredecessorOfZero for 0.
AlephInt predecessor(const AlephInt& l);

AlephInt oplus(const AlephInt& l, const AlephInt& m);
AlephInt odiamond(const AlephInt& l, const AlephInt& m);
std::strong_ordering compare_aleph(const AlephInt& l, const AlephInt& m);

// L (+) M and L <> M for standard M, by unrolling L (+) S(M) = L (+) M (+) 1
// and L <> S(M) = L <> M (+) L from M = 0.
AlephInt oplus_unrolled(const AlephInt& l, unsigned long m);
AlephInt odiamond_unrolled(const AlephInt& l, unsigned long m);

// (N >= 1 and a_N > 0) or (N = 0 and a_0 >= 0).
bool in_aleph_plus(const AlephInt& l);

// t + k*o  ->  t*Sigma (+) k. Requires t > 0, or t = 0 and k >= 0.
AlephInt phi(const GridPoint& x1);
// Inverse of phi on degree <= 1 elements of aleph+.
GridPoint psi(const AlephInt& l);

// Sigma part kept, constant floored, o-powers dropped, so that L <= x < L + 1.
AlephInt integer_truncature(const OmegaNumber& x);

// L with L*a <= b < (L+1)*a for a > 0, b >= 0.
AlephInt archimedean_division(const OmegaNumber& a, const OmegaNumber& b);

std::string to_string(const AlephInt& l);
std::string to_string(const GridPoint& x);

}  // namespace omega
