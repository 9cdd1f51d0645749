#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omega/errors.hpp"
#include "omega/rational.hpp"

namespace omega {

/**
 * Truncated Laurent series in the positive infinitesimal `o`, with finitely
 * many powers of Sigma = 1/o.
 *
 * A value stores the coefficients of o^valuation, o^(valuation+1), ... and a
 * known order K: every coefficient of o^k with k <= K is exact, anything above
 * is unknown and rendered as O(o^(K+1)). K == kExact means no unknown tail.
 *
 * Canonical form: first and last stored coefficients are nonzero, nothing is
 * stored past K. A zero value stores nothing; it is exact zero when
 * K == kExact and an unknown O(o^(K+1)) otherwise.
 *
 * Values are immutable once built.
 */
class OmegaNumber {
 public:
  /// Exact zero.
  OmegaNumber() = default;
  /// Exact standard constant.
  OmegaNumber(const Rational& c);  // NOLINT(google-explicit-constructor)
  OmegaNumber(long c);             // NOLINT(google-explicit-constructor)

  /// c * o^e, exact.
  static OmegaNumber monomial(const Rational& c, Exponent e);
  static OmegaNumber o() { return monomial(1, 1); }
  static OmegaNumber sigma() { return monomial(1, -1); }
  /// O(o^(known_order+1)): zero as far as anything is known.
  static OmegaNumber unknown(Exponent known_order);

  /// Builds the canonical value from a sparse exponent -> coefficient map.
  static OmegaNumber normalize(const std::map<Exponent, Rational>& raw, Exponent known_order = kExact);
  /// Builds from a dense coefficient run starting at `first_exponent`.
  static OmegaNumber from_dense(Exponent first_exponent, std::vector<Rational> coeffs,
                                Exponent known_order = kExact);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_exact() const noexcept { return known_order_ == kExact; }
  /// Exact zero (not just unknown).
  bool is_exact_zero() const noexcept { return is_zero() && is_exact(); }

  /// Exponent of the first stored coefficient. Undefined for zero values.
  Exponent valuation() const noexcept { return valuation_; }
  Exponent known_order() const noexcept { return known_order_; }
  /// Exponent of the last stored coefficient (valuation for monomials).
  Exponent last_exponent() const noexcept;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of o^e. Throws OrderExceedsKnown when e > known_order.
  Rational coefficient(Exponent e) const;

  /// Lowest possible exponent of a nonzero term: valuation, or K+1 for an unknown zero.
  Exponent effective_valuation() const noexcept;

  /// Sign of the value: -1, 0, +1. Throws IndistinguishableAtTruncation for an unknown zero.
  int sign() const;

  /// Drops every term above o^n and marks n as known order. Never errors;
  /// a value already known to a lower order is left unchanged.
  OmegaNumber clip(Exponent n) const;

  /// Multiplies by o^shift.
  OmegaNumber shifted(Exponent shift) const;

  OmegaNumber operator-() const;
  friend OmegaNumber operator+(const OmegaNumber& x, const OmegaNumber& y);
  friend OmegaNumber operator-(const OmegaNumber& x, const OmegaNumber& y);
  friend OmegaNumber operator*(const OmegaNumber& x, const OmegaNumber& y);
  OmegaNumber& operator+=(const OmegaNumber& y) { return *this = *this + y; }
  OmegaNumber& operator-=(const OmegaNumber& y) { return *this = *this - y; }
  OmegaNumber& operator*=(const OmegaNumber& y) { return *this = *this * y; }

  /// Structural equality: same coefficients and same known order.
  friend bool operator==(const OmegaNumber& x, const OmegaNumber& y) {
    return x.known_order_ == y.known_order_ && x.valuation_ == y.valuation_ && x.coeffs_ == y.coeffs_;
  }

 private:
  static OmegaNumber build(Exponent first_exponent, std::vector<Rational>&& dense, Exponent known_order);

  Exponent valuation_ = 0;
  std::vector<Rational> coeffs_;
  Exponent known_order_ = kExact;
};

/// ord(x): valuation, nullopt meaning +infinity for exact zero.
/// Throws IndistinguishableAtTruncation for an unknown zero.
std::optional<Exponent> ord(const OmegaNumber& x);

/// Standard part x_S. Throws NotInRo when x has Sigma powers.
Rational standard_part(const OmegaNumber& x);

/// x - x_S for an element of R_o.
OmegaNumber infinitesimal_part(const OmegaNumber& x);

/// T_N(x). Throws OrderExceedsKnown if n > known_order.
OmegaNumber truncate(const OmegaNumber& x, Exponent n);

/// Multiplicative inverse computed to absolute order `order` (exact when x is a monomial).
OmegaNumber invert(const OmegaNumber& x, Exponent order);

/// x / y, with y inverted to enough order for the quotient to be known to `order`.
OmegaNumber divide(const OmegaNumber& x, const OmegaNumber& y, Exponent order);

/// Lexicographic three-way comparison. Throws IndistinguishableAtTruncation when
/// the two values agree on every known coefficient but unknown tails remain.
std::strong_ordering compare(const OmegaNumber& x, const OmegaNumber& y);

/// x << y, i.e. k|x| < |y| for every standard k.
bool much_less(const OmegaNumber& x, const OmegaNumber& y);

/// x^alpha via the generalized binomial series, known to absolute order `order`.
OmegaNumber pow_rational(const OmegaNumber& x, const Rational& alpha, Exponent order);

/// Canonical plain rendering, e.g. `2*S + 1 - 1/2*o + O(o^3)`.
std::string to_string(const OmegaNumber& x);

/// Renders o^e: "", "o", "o^3", "S", "S^2".
std::string monomial_string(Exponent e);

/// Extended number: a finite prefix optionally closed by an infinite moment
/// (+inf or -inf times o^position). Supports comparison only.
class ExtendedOmega {
 public:
  struct InfiniteMoment {
    Exponent position;
    int sign;
    friend bool operator==(const InfiniteMoment&, const InfiniteMoment&) = default;
  };

  ExtendedOmega() = default;
  ExtendedOmega(OmegaNumber finite);  // NOLINT(google-explicit-constructor)

  /// prefix + sign * inf * o^position. Prefix terms at or above `position` are absorbed.
  static ExtendedOmega with_infinite_moment(const OmegaNumber& prefix, Exponent position, int sign);
  /// eps = +inf * o.
  static ExtendedOmega epsilon() { return with_infinite_moment(OmegaNumber(), 1, +1); }

  const OmegaNumber& prefix() const noexcept { return prefix_; }
  const std::optional<InfiniteMoment>& infinite_moment() const noexcept { return moment_; }

  friend bool operator==(const ExtendedOmega&, const ExtendedOmega&) = default;

 private:
  OmegaNumber prefix_;
  std::optional<InfiniteMoment> moment_;
};

std::strong_ordering compare_extended(const ExtendedOmega& x, const ExtendedOmega& y);

/// Maximum of a finite nonempty set.
ExtendedOmega sup_finite(const std::vector<ExtendedOmega>& set);

std::string to_string(const ExtendedOmega& x);

/// Limit of a sequence whose moments up to o^n stabilize. Terms not yet known
/// up to o^n count as unsettled.
///
/// Inspects gen(0), gen(1), ... up to `budget` terms and returns T_n of the
/// first term whose truncation stays unchanged for `stable_run` consecutive
/// terms. Throws NoStabilization when the budget runs out first.
OmegaNumber cauchy_limit(const std::function<OmegaNumber(std::size_t)>& gen, Exponent n,
                         std::size_t budget = 64, std::size_t stable_run = 4);

}  // namespace omega
