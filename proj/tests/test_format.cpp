#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "omega/cli/commands.hpp"
#include "omega/cli/format.hpp"
#include "random_values.hpp"

using namespace omega;
using namespace omega::cli;
using omega::testing::Sampler;

namespace {

const OmegaNumber o = OmegaNumber::o();

std::string eval_plain(const std::string& text, Exponent order) {
  return render(evaluate(*parse(text), order), OutputFormat::Plain);
}

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("plain rendering") {
  CHECK(render(Value(OmegaNumber()), OutputFormat::Plain) == "0");
  const auto x = (OmegaNumber(2) * OmegaNumber::sigma() + OmegaNumber(1) - OmegaNumber(make_rational(1, 2)) * o).clip(2);
  CHECK(render(Value(x), OutputFormat::Plain) == "2*S + 1 - 1/2*o + O(o^3)");
  CHECK(render(Value(ExtendedOmega::epsilon()), OutputFormat::Plain) == "inf*o");
  CHECK(render(AlephInt::from_coefficients({3, 2}), OutputFormat::Plain) == "2*S + 3");
}

TEST_CASE("json schema") {
  CHECK(to_json(OmegaNumber()).dump() == R"({"valuation":null,"coefficients":[],"known_order":null,"infinite_moment":null})");
  CHECK(to_json(ExtendedOmega::epsilon()).dump() ==
        R"({"valuation":null,"coefficients":[],"known_order":null,"infinite_moment":{"position":1,"sign":1}})");
  const auto x = (OmegaNumber::sigma() - OmegaNumber(make_rational(1, 3)) * o).clip(4);
  CHECK(to_json(x).dump() ==
        R"({"valuation":-1,"coefficients":[[1,1],[0,1],[-1,3]],"known_order":4,"infinite_moment":null})");

  const Rational big(Integer("123456789012345678901234567891"), Integer("7"));
  const auto j = to_json(OmegaNumber(big));
  CHECK(j["coefficients"][0][0] == "123456789012345678901234567891");
  CHECK(j["coefficients"][0][1] == 7);
  CHECK(omega_from_json(j) == OmegaNumber(big));
}

TEST_CASE("json re-parses to the identical value") {
  Sampler rng(211);
  for (int i = 0; i < 300; ++i) {
    const auto x = i % 2 ? rng.exact(rng.integer(-3, 3), 5) : rng.truncated(-3, 2, rng.integer(2, 6));
    CHECK(omega_from_json(Json::parse(to_json(x).dump())) == x);
    const Exponent position = x.is_exact() ? rng.integer(1, 9) : x.known_order();
    const auto e = ExtendedOmega::with_infinite_moment(x, position, i % 3 ? 1 : -1);
    CHECK(extended_from_json(Json::parse(to_json(e).dump())) == e);
  }
  CHECK_THROWS_AS(omega_from_json(Json::parse("{}")), DomainError);
  CHECK_THROWS_AS(omega_from_json(to_json(ExtendedOmega::epsilon())), DomainError);
}

TEST_CASE("evaluation") {
  CHECK(eval_plain("sqrt(1+o)", 4) == "1 + 1/2*o - 1/8*o^2 + 1/16*o^3 - 5/128*o^4 + O(o^5)");
  CHECK(eval_plain("o*S", 4) == "1");
  CHECK(eval_plain("S^2*(1+o)^(1/2)", 2) == "S^2 + 1/2*S - 1/8 + 1/16*o - 5/128*o^2 + O(o^3)");
  CHECK(eval_plain("3/2 - eps", 4) == "3/2 - inf*o");
  CHECK(eval_plain("int[p2](5*o)", 6) == "30*o^3");
  CHECK(eval_plain("solve[p2 = 1 + o; 1]", 2) == "1 + 1/2*o - 1/8*o^2 + O(o^3)");
  CHECK(eval_plain("int^2[p0; 0, 1](3*o)", 4) == "3*o + 3*o^2");
  CHECK(eval_plain("{1, 2, 3}(2)", 4) == "17");
  CHECK(eval_plain("geom(2 + o)", 2) == "-1 + o - o^2 + O(o^3)");
  CHECK_THROWS_AS(eval_plain("eps*2", 2), DomainError);
  CHECK_THROWS_AS(eval_plain("exp(1 + o)", 2), UnsupportedBasePoint);
  CHECK_THROWS_AS(eval_plain("solve[p2 = 1 + o; o]", 2), DomainError);

  CHECK(to_string(evaluate_rational(*parse("(1+o)/(o^2*(1-o))"))) == "(-1 - o)/(-o^2 + o^3)");
  CHECK(evaluate_rational(*parse("S*o")) == RationalFunction(1));
  CHECK_THROWS_AS(evaluate_rational(*parse("sqrt(1+o)")), DomainError);
}

TEST_CASE("command exit codes") {
  CHECK(run_cli({"eval", "1+o"}).code == kSuccess);
  CHECK(run_cli({"eval", "(1+"}).code == kParseError);
  CHECK(run_cli({"eval", "1/0"}).code == kMathError);
  CHECK(run_cli({"cmp", "1/(1-o)", "1+o", "--order", "1"}).code == kIndeterminate);
  CHECK(run_cli({"--order", "-1", "eval", "1"}).code == kParseError);
  CHECK(run_cli({"frobnicate"}).code == kParseError);

  // An error never leaves partial output behind.
  const auto partial = run_cli({"eval", "1", "1/0"});
  CHECK(partial.out.empty());
  CHECK(partial.err.find("DivisionByZero") != std::string::npos);
  CHECK(partial.err.find("in: 1/0") != std::string::npos);
}

TEST_CASE("stdin and interactive input") {
  const auto piped = run_cli({"--order", "2"}, "1+o\n\nsqrt(4+o)\n");
  CHECK(piped.code == kSuccess);
  CHECK(piped.out == "1 + o\n2 + 1/4*o - 1/64*o^2 + O(o^3)\n");

  const auto session = run_cli({"-i"}, "o*S\nfoo\n2^3\n");
  CHECK(session.code == kSuccess);
  CHECK(session.out == "omega> 1\nomega> omega> 8\nomega> \n");
  CHECK(session.err.find("ParseError") != std::string::npos);
}

TEST_CASE("order limit from the environment") {
  setenv("OMEGA_MAX_ORDER", "3", 1);
  CHECK(run_cli({"--order", "4", "eval", "1"}).code == kParseError);
  CHECK(run_cli({"--order", "3", "eval", "1"}).code == kSuccess);
  unsetenv("OMEGA_MAX_ORDER");
  CHECK(run_cli({"--order", "64", "eval", "1"}).code == kSuccess);
}
