#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/omega_number.hpp"

namespace omega {

/// Produces a_n known at least up to o^order (or exactly).
using CoefficientStream = std::function<OmegaNumber(std::size_t n, Exponent order)>;

/// A regular function F(t0 + u) = sum_n a_n u^n around a standard base point.
///
/// Coefficients a_n may be nonstandard; `coefficient_floor` is a lower bound
/// on their valuations, which bounds how many terms reach a given order.
/// Polynomials carry their degree and may be evaluated at any point.
///
/// Copies share one memo table; lookups are synchronized.
class RegularFunction {
 public:
  struct Options {
    std::optional<std::size_t> degree;  ///< set for polynomials
    std::optional<Rational> radius;     ///< nullopt means infinite
    Exponent coefficient_floor = 0;
  };

  RegularFunction(std::string name, Rational base_point, CoefficientStream stream, Options options);
  RegularFunction(std::string name, Rational base_point, CoefficientStream stream)
      : RegularFunction(std::move(name), std::move(base_point), std::move(stream), Options{}) {}

  /// Polynomial with the given coefficients in powers of (x - t0).
  static RegularFunction polynomial(std::string name, Rational base_point, std::vector<OmegaNumber> coeffs);

  const std::string& name() const noexcept { return name_; }
  const Rational& base_point() const noexcept { return base_point_; }
  const std::optional<Rational>& radius() const noexcept { return options_.radius; }
  const std::optional<std::size_t>& degree() const noexcept { return options_.degree; }
  Exponent coefficient_floor() const noexcept { return options_.coefficient_floor; }
  const Options& options() const noexcept { return options_; }

  /// a_n, known at least up to o^order.
  OmegaNumber coeff(std::size_t n, Exponent order) const;

 private:
  struct Memo;

  std::string name_;
  Rational base_point_;
  Options options_;
  std::shared_ptr<Memo> memo_;
};

/// F(t0 + u). u must be infinitesimal (or 0) unless F is a polynomial.
OmegaNumber eval_infinitesimal(const RegularFunction& f, const OmegaNumber& u, Exponent order);

/// F(x) for an absolute argument x, i.e. eval_infinitesimal(F, x - t0).
OmegaNumber eval(const RegularFunction& f, const OmegaNumber& x, Exponent order);

/// q-th derivative: coefficients (n+q)!/n! a_{n+q}.
RegularFunction derivative(const RegularFunction& f, std::size_t q);

/// x -> F(x + v) at the same base point, with coefficients F^(q)(t0 + v)/q!.
RegularFunction taylor_shift(const RegularFunction& f, const OmegaNumber& v);

/// Named builtins: exp, sin, cos (at 0), log (at 1), geom (1/(1-x) at 0),
/// id (at any point). Throws UnsupportedBasePoint elsewhere.
RegularFunction builtin(const std::string& name, const Rational& base_point);

/// x^alpha around t > 0; t^alpha must be rational.
RegularFunction builtin_pow(const Rational& alpha, const Rational& base_point);

/// p_m(x) = x^m around t0.
RegularFunction monomial_function(std::size_t m, const Rational& base_point = 0);

RegularFunction constant_function(const OmegaNumber& c, const Rational& base_point = 0);

/// Pointwise map R_o -> R_o, used for NS*-continuity sampling.
using PointMap = std::function<OmegaNumber(const OmegaNumber&)>;

struct NsStarReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::optional<std::size_t> counterexample;  ///< index of the first failing pair
  std::string detail;
};

/// Checks that |x2 - x1| << |F(x2) - F(x1)| never holds on the samples.
NsStarReport ns_star_check(const PointMap& f, const std::vector<std::pair<OmegaNumber, OmegaNumber>>& samples);

/// Infinitesimally close pairs around several standard points.
std::vector<std::pair<OmegaNumber, OmegaNumber>> canonical_ns_star_samples();

/// Solves F(x) = y moment by moment from a standard seed with F(seed)_S = y_S
/// and F'(seed)_S != 0. The result is known up to o^order.
OmegaNumber solve_lift(const RegularFunction& f, const OmegaNumber& y, const Rational& seed, Exponent order);

}  // namespace omega
