#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omega/rational_function.hpp"
#include "random_values.hpp"

using namespace omega;
using omega::testing::Sampler;

namespace {

const OmegaNumber o = OmegaNumber::o();
const RationalFunction ro = RationalFunction::o();

OmegaNumber q(long n, long d = 1) { return OmegaNumber(make_rational(n, d)); }
RationalFunction r(long n, long d = 1) { return RationalFunction(make_rational(n, d)); }

Polynomial random_poly(Sampler& rng, bool nonzero) {
  for (;;) {
    std::vector<Rational> c(static_cast<std::size_t>(rng.integer(0, 4)) + 1);
    for (auto& x : c) x = rng.rational();
    Polynomial p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

RationalFunction random_rf(Sampler& rng) {
  auto den = random_poly(rng, true) * Polynomial::o_power(static_cast<std::size_t>(rng.integer(0, 2)));
  return RationalFunction(random_poly(rng, false), den);
}

void check_same(const OmegaNumber& a, const OmegaNumber& b, Exponent order) {
  CHECK(to_string(a.clip(order)) == to_string(b.clip(order)));
}

}  // namespace

TEST_CASE("polynomial gcd and canonical form") {
  const Polynomial a({1, -1});  // 1 - o
  const Polynomial b({1, 1});   // 1 + o
  CHECK(gcd(a * b, a * a) == Polynomial({-1, 1}));
  const RationalFunction f(a * b, a.scaled(3));
  CHECK(f.denominator() == Polynomial::constant(1));
  CHECK(f.numerator() == b.scaled(make_rational(-1, 3)).scaled(-1));
  CHECK(RationalFunction(Polynomial(), b) == r(0));
  CHECK_THROWS_AS(RationalFunction(b, Polynomial()), DivisionByZero);
  CHECK(to_string(RationalFunction(b, Polynomial({0, 0, 1}) * a)) == "(-1 - o)/(-o^2 + o^3)");
}

TEST_CASE("expansion") {
  const auto geometric = r(1) / (r(1) - ro);
  CHECK(to_string(expand(geometric, 4)) == "1 + o + o^2 + o^3 + o^4 + O(o^5)");
  CHECK(expand(invert(ro), 5) == OmegaNumber::sigma());
  CHECK(expand(invert(ro), 5).is_exact());

  // (1 + o) / (o^2 (1 - o)) = S^2 + 2S + 2 + 2o + ...
  const auto pole = (r(1) + ro) / (ro * ro * (r(1) - ro));
  const auto e = expand(pole, 3);
  CHECK(to_string(e) == "S^2 + 2*S + 2 + 2*o + 2*o^2 + 2*o^3 + O(o^4)");
  check_same(e * (o * o * (q(1) - o)), q(1) + o, 3);

  CHECK(expand(r(0), 3).is_exact_zero());
  CHECK(expand(r(1) + ro * ro, 1) == q(1) + o * o);
}

TEST_CASE("expansion multiplies back to the numerator") {
  Sampler rng(101);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_rf(rng);
    const Exponent order = rng.integer(0, 8);
    const auto back = expand(f, order) * f.denominator().to_omega();
    check_same(back, f.numerator().to_omega(), order);
  }
}

TEST_CASE("field laws and expansion homomorphism") {
  CHECK(invert(ro) * ro == r(1));
  CHECK(r(1) / (r(1) + ro) + ro / (r(1) + ro) == r(1));
  CHECK_THROWS_AS(invert(r(0)), DivisionByZero);
  CHECK(pow_int(r(1) + ro, -2) * pow_int(r(1) + ro, 2) == r(1));

  Sampler rng(103);
  for (int i = 0; i < 150; ++i) {
    const auto a = random_rf(rng);
    const auto b = random_rf(rng);
    const auto c = random_rf(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == r(0));
    if (!a.is_zero()) CHECK(a * invert(a) == r(1));
    const Exponent order = 6;
    check_same(expand(a + b, order), expand(a, order) + expand(b, order), order);
    // Sigma powers of each factor eat into the other's known order.
    check_same(expand(a * b, order), expand(a, order + 8) * expand(b, order + 8), order);
  }
}

TEST_CASE("order through expansion") {
  const auto geometric = r(1) / (r(1) - ro);
  CHECK(compare(geometric, r(1) + ro, 4) == std::strong_ordering::greater);
  CHECK_THROWS_AS(compare(geometric, r(1) + ro, 1), IndistinguishableAtTruncation);
  CHECK(compare(ro, r(0), 2) == std::strong_ordering::greater);
  CHECK(compare(ro, r(1), 0) == std::strong_ordering::less);
  CHECK(compare(invert(ro), r(1000000), 0) == std::strong_ordering::greater);
  CHECK(compare(geometric, geometric, 0) == std::strong_ordering::equal);

  // Agrees with the sign of the difference.
  Sampler rng(107);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_rf(rng);
    const auto b = random_rf(rng);
    const auto diff = a - b;
    if (diff.is_zero()) continue;
    const auto expected = expand(diff, 12).sign();
    CHECK(compare(a, b, 12) == (expected < 0 ? std::strong_ordering::less : std::strong_ordering::greater));
  }
}

TEST_CASE("completion by truncations") {
  const auto root = pow_rational(q(1) + o, make_rational(1, 2), 4);
  const auto seq = completion_demo(root, 4);
  REQUIRE(seq.size() == 5);
  CHECK(to_string(seq[4]) == "1 + 1/2*o - 1/8*o^2 + 1/16*o^3 - 5/128*o^4");
  for (Exponent n = 0; n <= 4; ++n) {
    const auto limit = cauchy_limit([&](std::size_t i) { return expand(seq[std::min<std::size_t>(i, 4)], 4); }, n);
    CHECK(limit == root.clip(n));
  }

  const auto poly = q(3) - o * o;
  const auto fixed = completion_demo(poly, 5);
  for (std::size_t i = 2; i < fixed.size(); ++i) CHECK(fixed[i] == fixed[2]);

  const auto series = expand(r(1) / (r(1) - ro), 6);
  const auto partial = completion_demo(series, 6);
  for (std::size_t i = 0; i < partial.size(); ++i) {
    RationalFunction sum = r(0), power = r(1);
    for (std::size_t k = 0; k <= i; ++k, power = power * ro) sum = sum + power;
    CHECK(partial[i] == sum);
  }
  CHECK_THROWS_AS(completion_demo(OmegaNumber::sigma(), 2), NotInRo);
}

TEST_CASE("density witness") {
  Sampler rng(109);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto s = rng.exact(rng.integer(-2, 2), 4);
    const auto t = rng.exact(rng.integer(-2, 2), 4);
    if (compare(s, t) != std::strong_ordering::less) continue;
    const auto f = expand(density_witness(s, t), 20);
    CHECK(compare(s, f) == std::strong_ordering::less);
    CHECK(compare(f, t) == std::strong_ordering::less);
    ++checked;
  }
  CHECK(checked > 100);
  CHECK(to_string(density_witness(q(1), q(1) + o)) == "1 + 1/2*o");
  CHECK_THROWS_AS(density_witness(q(1), q(1)), DomainError);
}

TEST_CASE("cut of the square root of 1 + o") {
  const auto radicand = r(1) + ro;
  const auto root = pow_rational(q(1) + o, make_rational(1, 2), 10);
  const auto seq = completion_demo(root, 8);
  for (std::size_t n = 0; n < seq.size(); ++n) {
    const auto side = sqrt_cut_side(seq[n], radicand);
    CHECK(side == compare(expand(seq[n], 10), root));
  }
  CHECK(sqrt_cut_side(r(1), radicand) == std::strong_ordering::less);
  CHECK(sqrt_cut_side(r(1) + ro / r(2), radicand) == std::strong_ordering::greater);
  CHECK(sqrt_cut_side(r(1) + ro, r(1) + r(2) * ro + ro * ro) == std::strong_ordering::equal);
  CHECK_THROWS_AS(sqrt_cut_side(-ro, radicand), DomainError);
}
