#include "omega/cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "omega/aleph.hpp"
#include "omega/calculus.hpp"
#include "omega/cli/evaluator.hpp"
#include "omega/cli/format.hpp"
#include "omega/rational_function.hpp"

namespace omega::cli {

namespace {

constexpr Exponent kDefaultMaxOrder = 64;

struct Settings {
  Exponent order = 8;
  OutputFormat format = OutputFormat::Plain;
};

// Input text of the parse or evaluation in progress, for error context.
struct Source {
  std::string text;
};

class Session {
 public:
  Session(const Settings& settings, Source& source) : s_(settings), source_(source) {}

  ExprPtr expr(const std::string& text) {
    source_.text = text;
    return parse(text);
  }

  FuncRef func(const std::string& text) {
    source_.text = text;
    return parse_function(text);
  }

  Value value(const std::string& text) { return evaluate(*expr(text), s_.order); }
  OmegaNumber number(const std::string& text) { return evaluate_number(*expr(text), s_.order); }
  AlephInt aleph(const std::string& text) { return AlephInt::from_omega(number(text)); }

  std::string show(const Value& v) const { return render(v, s_.format); }
  std::string show(const AlephInt& v) const { return render(v, s_.format); }
  std::string show_text(const std::string& key, const std::string& text) const {
    return s_.format == OutputFormat::Json ? Json{{key, text}}.dump() : text;
  }

  const Settings& settings() const { return s_; }

 private:
  const Settings& s_;
  Source& source_;
};

std::string ordering_symbol(std::strong_ordering c) {
  return c < 0 ? "<" : c > 0 ? ">" : "=";
}

// c1*sym^first + c2*sym^(first+1) + ..., skipping zero coefficients.
std::string series_text(const std::vector<Rational>& coeffs, std::size_t first, const std::string& sym) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    const std::size_t n = first + i;
    const std::string power = n == 1 ? sym : sym + "^" + std::to_string(n);
    const Rational mag = abs(c);
    const std::string term = mag == 1 ? power : to_string(mag) + "*" + power;
    if (out.empty())
      out = c < 0 ? "-" + term : term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

struct Row {
  std::string label;
  std::string plain;
  std::vector<Rational> values;
};

std::vector<std::string> value_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string join_values(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

// q_m^(p) = sum_l a^(p)_{m,l} p_l o^(m+p-l), highest p_l first.
std::string primitive_text(std::size_t m, std::size_t p) {
  std::string out;
  for (std::size_t l = m + p; l >= 1; --l) {
    const Rational c = a_coeff_p(p, m, l);
    if (c == 0) continue;
    std::string factor = "p_" + std::to_string(l);
    const std::size_t k = m + p - l;
    if (k == 1) factor += "*o";
    if (k > 1) factor += "*o^" + std::to_string(k);
    const Rational mag = abs(c);
    const std::string term = mag == 1 ? factor : to_string(mag) + "*" + factor;
    if (out.empty())
      out = c < 0 ? "-" + term : term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::vector<Row> table_rows(const std::string& name, std::size_t max, std::size_t p) {
  auto& tables = CoeffTables::shared();
  std::vector<Row> rows;
  const auto power_label = [](const char* sym, std::size_t k) {
    return k == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(k);
  };
  if (name == "dtoD") {
    for (std::size_t q = 1; q <= max; ++q) {
      auto v = d_to_D(q, max, tables);
      rows.push_back({power_label("D", q), power_label("D", q) + " = " + series_text(v, q, "d"), v});
    }
  } else if (name == "Dtod") {
    for (std::size_t n = 1; n <= max; ++n) {
      auto v = D_to_d(n, max, tables);
      rows.push_back({power_label("d", n), power_label("d", n) + " = " + series_text(v, n, "D"), v});
    }
  } else if (name == "X") {
    for (std::size_t q = 0; q <= max; ++q) {
      std::vector<Rational> v;
      for (std::size_t n = 0; n <= max; ++n) v.emplace_back(tables.X(q, n));
      const auto label = "X_" + std::to_string(q);
      rows.push_back({label, label + "^n, n=0.." + std::to_string(max) + ": " + join_values(v), v});
    }
  } else if (name == "K") {
    for (std::size_t q = 1; q <= max; ++q) {
      std::vector<Rational> v;
      for (std::size_t r = 0; r < q; ++r) v.emplace_back(tables.K(q - 1, r));
      const auto label = "K_" + std::to_string(q - 1);
      rows.push_back({label, label + "^r, r=0.." + std::to_string(q - 1) + ": " + join_values(v), v});
    }
  } else if (name == "bernoulli") {
    for (std::size_t k = 0; k <= max; ++k) {
      const auto b = tables.bernoulli(k);
      const auto label = "B_" + std::to_string(k);
      rows.push_back({label, label + " = " + to_string(b), {b}});
    }
  } else if (name == "a" || name == "ap") {
    const std::size_t order = name == "a" ? 1 : p;
    for (std::size_t m = 0; m <= max; ++m) {
      std::vector<Rational> v;
      for (std::size_t l = 1; l <= m + order; ++l) v.push_back(order == 1 ? tables.A(m, l) : tables.Ap(order, m, l));
      const auto label = "m=" + std::to_string(m);
      rows.push_back({label, label + ", l=1.." + std::to_string(m + order) + ": " + join_values(v), v});
    }
  } else if (name == "q") {
    for (std::size_t m = 0; m <= max; ++m) {
      std::vector<Rational> v;
      for (std::size_t l = 1; l <= m + p; ++l) v.push_back(a_coeff_p(p, m, l));
      const auto label = "q_" + std::to_string(m) + (p == 1 ? "" : "^(" + std::to_string(p) + ")");
      rows.push_back({label, label + " = " + primitive_text(m, p), v});
    }
  } else {
    throw DomainError("unknown table '" + name + "' (dtoD, Dtod, X, K, bernoulli, a, ap, q)");
  }
  return rows;
}

std::string render_table(const std::string& name, const std::vector<Row>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    Json j;
    j["table"] = name;
    j["rows"] = Json::array();
    for (const auto& r : rows) j["rows"].push_back(Json{{"row", r.label}, {"values", value_strings(r.values)}});
    return j.dump() + "\n";
  }
  std::string out;
  for (const auto& r : rows) out += r.plain + "\n";
  return out;
}

std::string leibniz_pi(std::size_t terms, OutputFormat fmt) {
  std::vector<Rational> sums;
  Rational s = 0;
  for (std::size_t k = 0; k < terms; ++k) {
    s += Rational(k % 2 ? -1 : 1, 2 * k + 1);
    s.canonicalize();
    sums.push_back(s);
  }
  if (fmt == OutputFormat::Json) return Json{{"demo", "leibniz-pi"}, {"partial_sums", value_strings(sums)}}.dump() + "\n";
  std::string out = "1 - 1/3 + 1/5 - 1/7 + ...\n";
  for (std::size_t k = 0; k < sums.size(); ++k) out += "n=" + std::to_string(k + 1) + ": " + to_string(sums[k]) + "\n";
  return out;
}

std::string aleph_command(Session& s, const std::vector<std::string>& a) {
  const auto need = [&a](std::size_t n) {
    if (a.size() != n + 1)
      throw DomainError("aleph " + a[0] + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  };
  const std::string& op = a[0];
  if (op == "succ") return need(1), s.show(successor(s.aleph(a[1])));
  if (op == "pred") return need(1), s.show(predecessor(s.aleph(a[1])));
  if (op == "add") return need(2), s.show(oplus(s.aleph(a[1]), s.aleph(a[2])));
  if (op == "mul") return need(2), s.show(odiamond(s.aleph(a[1]), s.aleph(a[2])));
  if (op == "div") {
    need(2);
    const auto b = s.number(a[1]);
    return s.show(archimedean_division(s.number(a[2]), b));
  }
  if (op == "trunc") return need(1), s.show(integer_truncature(s.number(a[1])));
  if (op == "member") {
    need(1);
    const bool in = in_aleph_plus(s.aleph(a[1]));
    if (s.settings().format == OutputFormat::Json) return Json{{"member", in}}.dump();
    return in ? "true" : "false";
  }
  if (op == "phi") {
    need(2);
    const auto t = s.number(a[1]);
    const auto k = s.number(a[2]);
    const Rational kr = standard_value(k);
    if (kr.get_den() != 1) throw DomainError("grid index " + to_string(kr) + " is not an integer");
    return s.show(phi(GridPoint{standard_value(t), kr.get_num()}));
  }
  if (op == "psi") {
    need(1);
    const auto g = psi(s.aleph(a[1]));
    return s.show_text("grid_point", to_string(g));
  }
  throw DomainError("unknown aleph operation '" + op + "' (succ, pred, add, mul, div, trunc, member, phi, psi)");
}

Exponent max_order() {
  const char* env = std::getenv("OMEGA_MAX_ORDER");
  if (!env || !*env) return kDefaultMaxOrder;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 0) throw DomainError(std::string("OMEGA_MAX_ORDER must be a nonnegative integer, got '") + env + "'");
  return v;
}

std::string caret_context(const std::string& text, std::size_t offset) {
  return "  " + text + "\n  " + std::string(offset, ' ') + "^\n";
}

int report(const OmegaError& e, const Source& source, std::ostream& err) {
  err << "error: " << e.kind() << ": " << e.what() << "\n";
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err << caret_context(source.text, pe->offset());
    return kParseError;
  }
  if (!source.text.empty()) err << "  in: " << source.text << "\n";
  return e.error_class() == ErrorClass::Indeterminate ? kIndeterminate : kMathError;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

int repl(Session& session, Source& source, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string line;
  for (;;) {
    out << "omega> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line == "quit" || line == "exit") break;
    try {
      out << session.show(session.value(line)) << "\n";
    } catch (const OmegaError& e) {
      report(e, source, err);
    }
  }
  out << "\n";
  return kSuccess;
}

// Arguments such as "-S+5" would be taken for options; a leading space keeps
// them positional and the expression parser skips it.
std::vector<std::string> protect_negative_arguments(const std::vector<std::string>& args) {
  static const std::vector<std::string> options = {"--order", "--format", "-i", "--interactive", "-p", "--leibniz",
                                                   "--init", "--expand", "--max", "--terms", "-h", "--help", "--"};
  std::vector<std::string> out;
  for (const auto& a : args) {
    bool keep = a.size() < 2 || a[0] != '-';
    for (const auto& o : options) keep = keep || a == o || a.rfind(o + "=", 0) == 0;
    keep = keep || a.find_first_not_of("0123456789", 1) == std::string::npos;
    out.push_back(keep ? a : " " + a);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings settings;
  Source source;
  Session session(settings, source);

  CLI::App app("Exact arithmetic with infinitesimals and nonstandard calculus", "omega-calc");
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string format = "plain";
  bool interactive = false;
  app.add_option("--order", settings.order, "Absolute truncation order N (results known to o^N)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));
  app.add_flag("-i,--interactive", interactive, "Read expressions from stdin with a prompt");

  std::vector<std::string> eval_exprs;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate expressions (from stdin when none are given)");
  eval_cmd->add_option("expr", eval_exprs, "Expressions");

  std::string cmp_a, cmp_b;
  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two values: prints <, = or >");
  cmp_cmd->add_option("a", cmp_a)->required();
  cmp_cmd->add_option("b", cmp_b)->required();

  std::string fn, at;
  std::size_t diff_p = 1;
  bool leibniz = false;
  auto* diff_cmd = app.add_subcommand("diff", "Finite difference D^p F(x) (or d^p F(x) with --leibniz)");
  diff_cmd->add_option("function", fn)->required();
  diff_cmd->add_option("x", at)->required();
  diff_cmd->add_option("-p", diff_p, "Order p")->check(CLI::Range(1, 64));
  diff_cmd->add_flag("--leibniz", leibniz, "Leibniz differential F^(p)(x) o^p");

  auto* sum_cmd = app.add_subcommand("sum", "Primitive G(x) with G(base) = 0 and G(x+o) - G(x) = F(x) o");
  sum_cmd->add_option("function", fn)->required();
  sum_cmd->add_option("x", at)->required();

  std::string bsum_t;
  long bsum_k = 0;
  auto* bsum_cmd = app.add_subcommand("bsum", "Brute grid sum F(t) o + F(t+o) o + ... over k steps");
  bsum_cmd->add_option("function", fn)->required();
  bsum_cmd->add_option("t", bsum_t)->required();
  bsum_cmd->add_option("k", bsum_k)->required();

  std::size_t ode_p = 1;
  std::vector<std::string> ode_init;
  auto* ode_cmd = app.add_subcommand("ode", "G with D^p G = F o^p and D^k G(base) = C_k o^k, evaluated at x");
  ode_cmd->add_option("p", ode_p)->required()->check(CLI::Range(1, 64));
  ode_cmd->add_option("function", fn)->required();
  ode_cmd->add_option("x", at)->required();
  ode_cmd->add_option("--init", ode_init, "Initial values C_0 .. C_(p-1)");

  std::string lift_y, lift_seed;
  auto* lift_cmd = app.add_subcommand("lift", "Solve F(x) = y near the standard seed");
  lift_cmd->add_option("function", fn)->required();
  lift_cmd->add_option("y", lift_y)->required();
  lift_cmd->add_option("seed", lift_seed)->required();

  std::string rf_text;
  std::optional<Exponent> expand_to;
  auto* expand_cmd = app.add_subcommand("expand", "Reduce a rational function of o and expand it");
  expand_cmd->add_option("rf", rf_text)->required();
  expand_cmd->add_option("--expand", expand_to, "Expansion order T (default: --order)");

  std::vector<std::string> aleph_args;
  auto* aleph_cmd = app.add_subcommand("aleph", "Nonstandard integers: succ, pred, add, mul, div, trunc, member, phi, psi");
  aleph_cmd->add_option("args", aleph_args)->required();

  std::string table_name;
  std::size_t table_max = 4, table_p = 1;
  auto* table_cmd = app.add_subcommand("table", "Coefficient tables: dtoD, Dtod, X, K, bernoulli, a, ap, q");
  table_cmd->add_option("name", table_name)->required();
  table_cmd->add_option("--max", table_max, "Largest index")->check(CLI::Range(0, 32));
  table_cmd->add_option("-p", table_p, "Order p for ap and q")->check(CLI::Range(1, 16));

  std::string demo_name;
  std::size_t demo_terms = 8;
  auto* demo_cmd = app.add_subcommand("demo", "Demonstrations: leibniz-pi");
  demo_cmd->add_option("name", demo_name)->required();
  demo_cmd->add_option("--terms", demo_terms, "Number of partial sums")->check(CLI::Range(1, 1000));

  try {
    const auto protected_args = protect_negative_arguments(args);
    std::vector<std::string> reversed(protected_args.rbegin(), protected_args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  settings.format = format == "json" ? OutputFormat::Json : OutputFormat::Plain;
  try {
    const Exponent limit = max_order();
    if (settings.order < 0 || settings.order > limit) {
      err << "error: --order " << settings.order << " outside 0.." << limit << "\n";
      return kParseError;
    }
  } catch (const OmegaError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (interactive) return repl(session, source, in, out, err);

    // Output is collected first so that an error never leaves partial results.
    std::ostringstream buf;
    const auto line = [&buf](const std::string& s) { buf << s << "\n"; };
    const auto function = [&] { return resolve_function(session.func(fn), natural_base(session.func(fn)), settings.order); };

    if (eval_cmd->parsed() || app.get_subcommands().empty()) {
      if (eval_exprs.empty()) eval_exprs = read_lines(in);
      for (const auto& e : eval_exprs) line(session.show(session.value(e)));
    } else if (cmp_cmd->parsed()) {
      const auto a = session.value(cmp_a);
      const auto b = session.value(cmp_b);
      source.text = cmp_a + " vs " + cmp_b;
      const auto as_ext = [](const Value& v) {
        return std::visit([](const auto& x) { return ExtendedOmega(x); }, v);
      };
      line(session.show_text("result", ordering_symbol(compare_extended(as_ext(a), as_ext(b)))));
    } else if (diff_cmd->parsed()) {
      const auto x = session.number(at);
      const auto ref = session.func(fn);
      const Rational base = ref.base ? *ref.base : (x.is_zero() || x.valuation() >= 0 ? standard_part(x) : Rational(0));
      const auto f = resolve_function(ref, base, settings.order);
      line(session.show(leibniz ? leibniz_differential(f, x, diff_p, settings.order)
                                : finite_difference(f, x, diff_p, settings.order)));
    } else if (sum_cmd->parsed()) {
      const auto x = session.number(at);
      line(session.show(eval(integrate(function(), OmegaNumber()), x, settings.order)));
    } else if (bsum_cmd->parsed()) {
      const auto f = function();
      line(session.show(brute_sum(f, standard_value(session.number(bsum_t)), bsum_k, settings.order)));
    } else if (ode_cmd->parsed()) {
      const auto x = session.number(at);
      std::vector<OmegaNumber> initial;
      for (const auto& c : ode_init) initial.push_back(session.number(c));
      if (initial.empty()) initial.resize(ode_p);
      const auto f = function();
      source.text = fn;
      line(session.show(eval(solve_ode(f, ode_p, initial), x, settings.order)));
    } else if (lift_cmd->parsed()) {
      const auto y = session.number(lift_y);
      const Rational seed = standard_value(session.number(lift_seed));
      const auto ref = session.func(fn);
      line(session.show(solve_lift(resolve_function(ref, seed, settings.order), y, seed, settings.order)));
    } else if (expand_cmd->parsed()) {
      const auto rf = evaluate_rational(*session.expr(rf_text));
      const auto e = expand(rf, expand_to.value_or(settings.order));
      if (settings.format == OutputFormat::Json)
        line(Json{{"rational_function", to_string(rf)}, {"expansion", to_json(e)}}.dump());
      else
        line(to_string(rf)), line(to_string(e));
    } else if (aleph_cmd->parsed()) {
      line(aleph_command(session, aleph_args));
    } else if (table_cmd->parsed()) {
      buf << render_table(table_name, table_rows(table_name, table_max, table_p), settings.format);
    } else if (demo_cmd->parsed()) {
      if (demo_name != "leibniz-pi") throw DomainError("unknown demo '" + demo_name + "' (leibniz-pi)");
      buf << leibniz_pi(demo_terms, settings.format);
    }
    out << buf.str();
    return kSuccess;
  } catch (const OmegaError& e) {
    return report(e, source, err);
  } catch (const std::invalid_argument& e) {
    err << "error: InvalidArgument: " << e.what() << "\n";
    if (!source.text.empty()) err << "  in: " << source.text << "\n";
    return kMathError;
  } catch (const std::logic_error& e) {
    err << "error: internal: " << e.what() << "\n";
    return kMathError;
  }
}

}  // namespace omega::cli
