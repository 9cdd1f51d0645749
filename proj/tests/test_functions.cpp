#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "omega/regular_function.hpp"
#include "random_values.hpp"

using namespace omega;
using omega::testing::Sampler;

namespace {

const OmegaNumber o = OmegaNumber::o();

OmegaNumber q(long n, long d = 1) { return OmegaNumber(make_rational(n, d)); }

RegularFunction random_polynomial(Sampler& rng, const Rational& base = 0) {
  std::vector<OmegaNumber> c(static_cast<std::size_t>(rng.integer(0, 6)) + 1);
  for (auto& x : c) x = OmegaNumber(rng.rational());
  return RegularFunction::polynomial("P", base, c);
}

// Exact powers-of-o coefficients up to `order`, compared after clipping both sides.
void check_equal_to(const OmegaNumber& a, const OmegaNumber& b, Exponent order) {
  CHECK(to_string(a.clip(order)) == to_string(b.clip(order)));
}

}  // namespace

TEST_CASE("evaluation at infinitesimal displacement") {
  const auto e = builtin("exp", 0);
  CHECK(to_string(eval_infinitesimal(e, o, 3)) == "1 + o + 1/2*o^2 + 1/6*o^3 + O(o^4)");
  CHECK(eval_infinitesimal(e, OmegaNumber(), 3) == q(1));
  CHECK_THROWS_AS(eval_infinitesimal(e, q(1), 3), NotInfinitesimal);

  const auto square = monomial_function(2, 1);
  CHECK(to_string(eval(square, q(1) + o + o * o, 5)) == "1 + 2*o + 3*o^2 + 2*o^3 + o^4");
  CHECK(eval(square, q(3), 4) == q(9));

  const auto g = builtin("geom", 0);
  CHECK(to_string(eval_infinitesimal(g, o, 4)) == "1 + o + o^2 + o^3 + o^4 + O(o^5)");
  for (std::size_t n = 0; n < 10; ++n) CHECK(g.coeff(n, 0) == q(1));
}

TEST_CASE("builtins") {
  const auto root = builtin_pow(make_rational(1, 2), 1);
  for (std::size_t k = 0; k < 8; ++k) CHECK(root.coeff(k, 0) == OmegaNumber(generalized_binomial(make_rational(1, 2), k)));

  // log at 1: (n+1) a_{n+1} = (-1)^n, the coefficients of 1/(1+u).
  const auto lg = builtin("log", 1);
  CHECK(lg.coeff(0, 0).is_exact_zero());
  for (std::size_t n = 0; n < 12; ++n)
    CHECK(OmegaNumber(static_cast<long>(n + 1)) * lg.coeff(n + 1, 0) == q(n % 2 == 0 ? 1 : -1));

  const auto s = builtin("sin", 0);
  const auto c = builtin("cos", 0);
  CHECK(to_string(eval_infinitesimal(s, o, 5)) == "o - 1/6*o^3 + 1/120*o^5 + O(o^6)");
  CHECK(to_string(eval_infinitesimal(c, o, 4)) == "1 - 1/2*o^2 + 1/24*o^4 + O(o^5)");
  // sin^2 + cos^2 = 1 at an infinitesimal point.
  const auto u = q(2) * o - o * o;
  const auto sv = eval_infinitesimal(s, u, 8);
  const auto cv = eval_infinitesimal(c, u, 8);
  CHECK(to_string(sv * sv + cv * cv) == "1 + O(o^9)");

  CHECK_THROWS_AS(builtin("exp", 1), UnsupportedBasePoint);
  CHECK_THROWS_AS(builtin("log", 2), UnsupportedBasePoint);
  CHECK_THROWS_AS(builtin_pow(make_rational(1, 2), 2), UnsupportedBasePoint);
  CHECK_THROWS_AS(builtin("tan", 0), DomainError);
  CHECK(builtin_pow(make_rational(1, 2), 16).coeff(0, 0) == q(4));
}

TEST_CASE("derivatives") {
  const auto e = builtin("exp", 0);
  const auto de = derivative(e, 1);
  for (std::size_t n = 0; n < 10; ++n) CHECK(de.coeff(n, 0) == e.coeff(n, 0));

  const auto p3 = monomial_function(3);
  const auto dp3 = derivative(p3, 1);
  CHECK(dp3.coeff(0, 0).is_exact_zero());
  CHECK(dp3.coeff(1, 0).is_exact_zero());
  CHECK(dp3.coeff(2, 0) == q(3));
  CHECK(dp3.coeff(3, 0).is_exact_zero());
  CHECK(derivative(p3, 4).coeff(0, 0).is_exact_zero());

  Sampler rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_polynomial(rng, rng.rational());
    const auto twice = derivative(derivative(f, 1), 1);
    const auto direct = derivative(f, 2);
    for (std::size_t n = 0; n < 8; ++n) CHECK(twice.coeff(n, 0) == direct.coeff(n, 0));
  }
}

TEST_CASE("evaluation is linear and multiplicative") {
  Sampler rng(37);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_polynomial(rng);
    const auto g = random_polynomial(rng);
    std::vector<OmegaNumber> sum(8), product(16);
    for (std::size_t n = 0; n < 8; ++n) sum[n] = f.coeff(n, 0) + g.coeff(n, 0);
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) product[a + b] += f.coeff(a, 0) * g.coeff(b, 0);
    const auto fs = RegularFunction::polynomial("F+G", 0, sum);
    const auto fp = RegularFunction::polynomial("FG", 0, product);
    const auto u = rng.exact(1, 3);
    const Exponent order = 7;
    check_equal_to(eval_infinitesimal(fs, u, order), eval_infinitesimal(f, u, order) + eval_infinitesimal(g, u, order),
                   order);
    check_equal_to(eval_infinitesimal(fp, u, order), eval_infinitesimal(f, u, order) * eval_infinitesimal(g, u, order),
                   order);
  }
}

TEST_CASE("taylor shift") {
  const auto e = builtin("exp", 0);
  const auto same = taylor_shift(e, OmegaNumber());
  check_equal_to(eval_infinitesimal(same, o, 6), eval_infinitesimal(e, o, 6), 6);
  const auto shifted = taylor_shift(e, o);
  check_equal_to(eval_infinitesimal(shifted, o, 6), eval_infinitesimal(e, q(2) * o, 6), 6);

  Sampler rng(41);
  for (int i = 0; i < 20; ++i) {
    const auto u = rng.exact(1, 3);
    const auto v = rng.exact(rng.integer(1, 2), 3);
    const auto f = i % 2 ? builtin("sin", 0) : random_polynomial(rng);
    check_equal_to(eval_infinitesimal(taylor_shift(f, v), u, 6), eval_infinitesimal(f, u + v, 6), 6);
  }
  CHECK_THROWS_AS(taylor_shift(e, q(1)), NotInfinitesimal);
}

TEST_CASE("Newton's DI expansion") {
  // sqrt(n^2 - (a + o)^2) with n = 5, a = 3.
  const Rational n = 5, a = 3, e = 4;
  const auto expected = q(4) - OmegaNumber(a / e) * o - OmegaNumber(n * n / (2 * e * e * e)) * o * o -
                        OmegaNumber(a * n * n / (2 * e * e * e * e * e)) * o * o * o;
  CHECK(to_string(expected) == "4 - 3/4*o - 25/128*o^2 - 75/2048*o^3");

  const auto inner = q(25) - (q(3) + o) * (q(3) + o);
  const auto via_pow = pow_rational(inner, make_rational(1, 2), 3);
  CHECK(to_string(via_pow) == to_string(expected.clip(3)));

  const auto root = builtin_pow(make_rational(1, 2), 16);
  const auto via_stream = eval(root, inner, 3);
  CHECK(via_stream == via_pow);
  check_equal_to(via_stream * via_stream, inner, 3);
}

TEST_CASE("NS*-continuity sampling") {
  const auto samples = canonical_ns_star_samples();
  const auto square = ns_star_check([](const OmegaNumber& x) { return x * x; }, samples);
  CHECK(square.passed);
  CHECK(square.pairs_checked == samples.size());
  CHECK(ns_star_check([](const OmegaNumber& x) { return x; }, samples).passed);

  const PointMap moment_shift = [](const OmegaNumber& x) { return infinitesimal_part(x) * OmegaNumber::sigma(); };
  const auto report = ns_star_check(moment_shift, samples);
  CHECK_FALSE(report.passed);
  REQUIRE(report.counterexample.has_value());
  CHECK(report.detail.find("<<") != std::string::npos);
  CHECK_FALSE(ns_star_check(moment_shift, {{q(1) + o, q(1) + o + o * o}}).passed);
}

TEST_CASE("solution lifting") {
  const auto square = monomial_function(2);
  const auto root = solve_lift(square, q(1) + o, 1, 4);
  CHECK(to_string(root) == "1 + 1/2*o - 1/8*o^2 + 1/16*o^3 - 5/128*o^4 + O(o^5)");

  const auto id = builtin("id", 0);
  const auto y = q(2) - q(3) * o + q(1, 7) * o * o;
  CHECK(solve_lift(id, y, 2, 6) == y.clip(6));

  CHECK_THROWS_AS(solve_lift(square, q(1) + o, 2, 4), SeedMismatch);
  CHECK_THROWS_AS(solve_lift(square, o, 0, 4), SingularDerivative);

  // z^3 + (1 + x) z = 2 + x^3 with x -> o.
  const auto fluxion = RegularFunction::polynomial("fluxion", 0, {OmegaNumber(), q(1) + o, OmegaNumber(), q(1)});
  const auto target = q(2) + o * o * o;
  const auto z = solve_lift(fluxion, target, 1, 3);
  CHECK(to_string(z) == "1 - 1/4*o + 1/64*o^2 + 131/512*o^3 + O(o^4)");
  const auto residual = eval(fluxion, z, 3) - target;
  CHECK(residual.is_zero());
  CHECK(residual.known_order() == 3);

  Sampler rng(43);
  for (int i = 0; i < 20; ++i) {
    const auto f = builtin("exp", 0);
    const auto y2 = q(1) + rng.exact(1, 4);
    const auto x = solve_lift(f, y2, 0, 6);
    check_equal_to(eval(f, x, 6), y2, 6);
  }
}

TEST_CASE("p-fold differentiability witnesses") {
  // F(x0 + h) - sum_{i<=p} F^(i)(x0)/i! h^i has order above p * ord(h).
  const auto e = builtin("exp", 0);
  for (std::size_t p = 1; p <= 4; ++p) {
    const auto h = q(3) * o;
    OmegaNumber approx;
    OmegaNumber power(1);
    for (std::size_t i = 0; i <= p; ++i) {
      approx += eval(derivative(e, i), OmegaNumber(), 8) * OmegaNumber(Rational(1) / Rational(factorial(i))) * power;
      power *= h;
    }
    const auto remainder = eval_infinitesimal(e, h, 8) - approx;
    CHECK(*ord(remainder) > static_cast<Exponent>(p));
  }
}

TEST_CASE("memoized streams under concurrent readers") {
  std::atomic<int> calls{0};
  const RegularFunction f("counted", 0, [&calls](std::size_t n, Exponent) {
    ++calls;
    return OmegaNumber(static_cast<long>(n));
  });
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t)
    readers.emplace_back([&f] {
      for (std::size_t n = 0; n < 50; ++n) CHECK(f.coeff(n, 0) == OmegaNumber(static_cast<long>(n)));
    });
  for (auto& r : readers) r.join();
  CHECK(calls.load() >= 50);
  const int before = calls.load();
  for (std::size_t n = 0; n < 50; ++n) (void)f.coeff(n, 0);
  CHECK(calls.load() == before);
}
