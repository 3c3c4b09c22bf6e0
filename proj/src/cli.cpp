#include "weil/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "weil/characters.hpp"
#include "weil/error.hpp"
#include "weil/explicit_formula.hpp"
#include "weil/expression.hpp"
#include "weil/special_functions.hpp"
#include "weil/trace_checks.hpp"
#include "weil/transforms.hpp"
#include "weil/zeros.hpp"

namespace weil {

using json = nlohmann::json;

namespace {

constexpr std::pair<Command, const char*> command_names[] = {
    {Command::mellin, "mellin"},
    {Command::zeta, "zeta"},
    {Command::xi, "xi"},
    {Command::lchi, "lchi"},
    {Command::zeros, "zeros"},
    {Command::check_poisson, "check-poisson"},
    {Command::check_zspectral, "check-zspectral"},
    {Command::check_twisted_poisson, "check-twisted-poisson"},
    {Command::check_trace_lemma, "check-trace-lemma"},
    {Command::check_phi_identity, "check-phi-identity"},
    {Command::verify_explicit_formula, "verify-explicit-formula"},
};

// "key=value,key=value"
std::vector<std::pair<std::string, double>> key_values(const std::string& text, const char* what) {
  std::vector<std::pair<std::string, double>> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorKind::config, std::string(what) + ": expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    char* end = nullptr;
    double x = std::strtod(val.c_str(), &end);
    if (val.empty() || *end != '\0') fail(ErrorKind::config, std::string(what) + ": bad number '" + val + "'");
    kv.emplace_back(key, x);
  }
  return kv;
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx s_value(const RunConfig& c) {
  if (c.s.size() != 2) fail(ErrorKind::config, "--s takes re,im");
  return {c.s[0], c.s[1]};
}

json trunc_json(const TruncationSpec& t) {
  return json{{"n_max", t.n_max}, {"p_max", t.p_max}, {"e_max", t.e_max}, {"tail_tol", t.tail_tol}};
}
json quad_json(const QuadratureSpec& q) {
  return json{{"u_min", q.u_min}, {"u_max", q.u_max}, {"n_points", q.n_points}, {"tolerance", q.tolerance}};
}

json inputs_json(const RunConfig& c) {
  json j{{"command", to_string(c.command)}};
  if (!c.f.empty()) j["f"] = c.f;
  if (!c.f0.empty()) j["f0"] = c.f0;
  if (!c.f1.empty()) j["f1"] = c.f1;
  j["s"] = c.s;
  if (!c.x.empty()) j["x"] = c.x;
  if (c.modulus) {
    j["modulus"] = c.modulus;
    j["index"] = c.index;
  }
  j["trunc"] = trunc_json(c.trunc);
  j["quad"] = quad_json(c.quad);
  if (!c.zeros.empty()) j["zeros"] = c.zeros;
  if (c.command == Command::zeros) {
    j["max_height"] = c.max_height;
    j["precision"] = c.precision;
  }
  if (c.command == Command::check_trace_lemma) {
    j["n"] = c.grid_n;
    j["window"] = c.window;
    j["phi_width"] = c.phi_width;
  }
  if (c.command == Command::check_phi_identity) j["phi_width"] = c.phi_width;
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  return j;
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::config:
    case ErrorKind::parse_error:
    case ErrorKind::domain:
    case ErrorKind::pole:
    case ErrorKind::parity_mismatch:
    case ErrorKind::non_primitive_character:
    case ErrorKind::order_violation:
      return exit_config;
    default:
      return exit_certification;
  }
}

std::string cache_dir(const RunConfig& c) {
  if (const char* env = std::getenv("WEIL_CACHE_DIR"); env && *env) return env;
  if (!c.report.empty()) {
    auto p = std::filesystem::path(c.report).parent_path();
    return p.empty() ? "." : p.string();
  }
  return ".";
}

ZeroTable zero_source(const RunConfig& c, std::ostream& log) {
  if (c.zeros.empty()) fail(ErrorKind::config, "--zeros is required (path or auto:T)");
  if (c.zeros.rfind("auto:", 0) == 0) {
    std::string t = c.zeros.substr(5);
    char* end = nullptr;
    double T = std::strtod(t.c_str(), &end);
    if (t.empty() || *end != '\0' || !(T > 0)) fail(ErrorKind::config, "bad zero source '" + c.zeros + "'");
    std::ostringstream name;
    name << "zeta_zeros_auto_" << t << ".txt";
    auto path = std::filesystem::path(cache_dir(c)) / name.str();
    if (std::filesystem::exists(path)) {
      if (c.verbosity) log << "using cached zero table " << path.string() << "\n";
      return load_zeros(path.string());
    }
    ZeroTable z = find_zeros(T);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    try {
      save_zeros(z, path.string());
      if (c.verbosity) log << "cached zero table at " << path.string() << "\n";
    } catch (const NumericError& e) {
      log << "warning: could not cache zero table: " << e.what() << "\n";
    }
    return z;
  }
  if (!std::filesystem::exists(c.zeros)) fail(ErrorKind::config, "zero table " + c.zeros + " not found");
  return load_zeros(c.zeros);
}

struct Outcome {
  json outputs;
  bool pass = true;
};

double tol_or(const RunConfig& c, double d) { return c.tolerance.value_or(d); }

Outcome run_mellin(const RunConfig& c) {
  auto f = parse_test_function(c.f);
  cplx s = s_value(c);
  MellinValue m = c.quad_given ? mellin(f, s, c.quad) : mellin(f, s);
  Outcome o;
  o.outputs = {{"value", complex_json(m.value)}, {"est_error", m.est_error}};
  if (f.has_closed_mellin()) o.outputs["closed_form"] = complex_json(f.mellin_closed_form(s));
  o.pass = m.est_error <= tol_or(c, std::max(c.quad.tolerance, 1e-10 * std::abs(m.value)));
  return o;
}

Outcome run_scalar(const RunConfig& c) {
  cplx s = s_value(c);
  Outcome o;
  if (c.command == Command::zeta) {
    o.outputs = {{"value", complex_json(zeta(s))}};
  } else if (c.command == Command::xi) {
    auto v = xi(s);
    o.outputs = {{"value", complex_json(v.xi)}, {"zeta", complex_json(v.zeta)}, {"gamma_factor", complex_json(v.gamma_factor)}};
  } else {
    auto chi = primitive_character(c.modulus, c.index);
    json vals = json::array();
    for (int a = 0; a < c.modulus; ++a) vals.push_back(complex_json(chi(a)));
    o.outputs = {{"value", complex_json(l_chi(chi, s))},
                 {"completed", complex_json(completed_l_chi(chi, s))},
                 {"character", {{"values", vals}, {"parity", chi.parity}, {"gauss_sum", complex_json(chi.gauss_sum)},
                                {"kappa", complex_json(chi.kappa())}}}};
  }
  return o;
}

Outcome run_zeros(const RunConfig& c) {
  ZeroTable z = find_zeros(c.max_height, c.precision);
  if (!c.out.empty()) save_zeros(z, c.out);
  Outcome o;
  o.outputs = {{"count", z.size()}, {"predicted_count", z.predicted_count}, {"height_bound", z.height_bound},
               {"precision", z.precision}, {"ordinates", z.ordinates}};
  if (!c.out.empty()) o.outputs["path"] = c.out;
  o.pass = long(z.size()) == z.predicted_count || c.max_height < 14;
  return o;
}

json identity_json(const IdentityCheck& r) {
  return json{{"lhs", complex_json(r.lhs)}, {"rhs", complex_json(r.rhs)}, {"residual", r.residual}, {"budget", r.budget}};
}

std::vector<double> points_or(const RunConfig& c, std::vector<double> d) { return c.x.empty() ? d : c.x; }

Outcome run_poisson(const RunConfig& c) {
  auto f = parse_parity_function(c.f.empty() ? "gauss2" : c.f);
  double tol = tol_or(c, 1e-10);
  Outcome o;
  json rows = json::array();
  double worst = 0;
  for (double x : points_or(c, {0.25, 0.5, 1, 2, 4})) {
    auto r = poisson_check(f, x, c.trunc);
    auto j = identity_json(r);
    j["x"] = x;
    rows.push_back(j);
    worst = std::max(worst, r.residual);
  }
  o.outputs = {{"checks", rows}, {"max_residual", worst}, {"tolerance", tol}};
  o.pass = worst < tol;
  return o;
}

Outcome run_zspectral(const RunConfig& c) {
  auto f = parse_test_function(c.f);
  cplx s = s_value(c);
  QuadratureSpec q = c.quad_given ? c.quad : QuadratureSpec{};
  auto r = zspectral_check(f, s, c.trunc, q);
  double tol = tol_or(c, 1e-8);
  Outcome o;
  o.outputs = identity_json(r);
  o.outputs["tolerance"] = tol;
  o.pass = r.residual < tol;
  return o;
}

Outcome run_twisted(const RunConfig& c) {
  auto chi = primitive_character(c.modulus, c.index);
  std::string fe = c.f.empty() ? (chi.parity == 1 ? "gauss2" : "oddgauss2") : c.f;
  auto f = parse_parity_function(fe);
  double tol = tol_or(c, 1e-7);
  Outcome o;
  json rows = json::array();
  double worst = 0;
  for (double x : points_or(c, {0.5, 1, 2})) {
    auto r = twisted_poisson_check(chi, f, x, c.trunc);
    auto j = identity_json(r);
    j["x"] = x;
    rows.push_back(j);
    worst = std::max(worst, r.residual);
  }
  o.outputs = {{"checks", rows},
               {"max_residual", worst},
               {"tolerance", tol},
               {"kappa", complex_json(chi.kappa())},
               {"kappa_classical", complex_json(chi.kappa_classical())},
               {"abs_kappa", std::abs(chi.kappa())}};
  o.pass = worst < tol;
  return o;
}

Outcome run_trace(const RunConfig& c) {
  auto f0 = parse_test_function(c.f0.empty() ? c.f : c.f0);
  auto f1 = parse_test_function(c.f1.empty() ? c.f : c.f1);
  auto phi = build_phi(c.phi_width);
  auto grid = LogGrid::symmetric(c.window, c.grid_n);
  QuadratureSpec q = c.quad_given ? c.quad : QuadratureSpec{-2 * c.window, 2 * c.window, 65537, 1e-12};
  auto r = toeplitz_trace_check(f0, f1, phi, grid, q);
  double tol = tol_or(c, 1e-6);
  Outcome o;
  o.outputs = {{"trace", r.trace}, {"target", r.target}, {"target_error", r.target_error},
               {"residual", r.residual}, {"tolerance", tol}};
  o.pass = r.residual < tol;
  return o;
}

Outcome run_phi(const RunConfig& c) {
  auto phi = build_phi(c.phi_width);
  double tol = tol_or(c, 1e-10);
  QuadratureSpec q = c.quad_given ? c.quad : QuadratureSpec{-8 * c.phi_width - 4, 8 * c.phi_width + 4, 32769, 1e-12};
  Outcome o;
  json rows = json::array();
  double worst = 0, anti = 0;
  for (double x : points_or(c, {0.5, 1.0, std::numbers::e})) {
    double r = phi_log_identity(phi, x, q);
    rows.push_back({{"x", x}, {"residual", r}});
    worst = std::max(worst, r);
  }
  for (int k = -400; k <= 400; ++k) {
    double t = std::exp(k * 0.01 * c.phi_width);
    anti = std::max(anti, std::abs(phi(t) + phi(1 / t) - 1));
  }
  o.outputs = {{"log_identity", rows}, {"max_residual", worst}, {"antisymmetry", anti}, {"tolerance", tol}};
  o.pass = worst < tol && anti <= 2 * std::numeric_limits<double>::epsilon();
  return o;
}

json budgets_json(const ExplicitFormulaBudgets& b) {
  return json{{"tail_tol", b.tail_tol},
              {"p_max", b.p_max},
              {"e_max", b.e_max},
              {"zero_height", b.zero_height},
              {"zero_count", b.zero_count},
              {"zero_precision", b.zero_precision},
              {"zero_tail_bound", b.zero_tail_bound},
              {"zero_precision_error", b.zero_precision_error},
              {"spectral_quadrature_error", b.spectral_quadrature_error},
              {"prime_tail_bound", b.prime_tail_bound},
              {"w_infty_error", b.w_infty_error},
              {"rounding", b.rounding},
              {"total", b.total}};
}

Outcome run_explicit(const RunConfig& c, std::ostream& log) {
  auto f = parse_test_function(c.f);
  ZeroTable zt = zero_source(c, log);
  auto r = verify_explicit_formula(f, zt, c.trunc);
  double tol = tol_or(c, 1e-4);
  const auto& w = r.w_infty_detail;
  Outcome o;
  o.outputs = {{"function", r.function},
               {"spectral_side", r.spectral_side},
               {"pole_contribution", r.pole_contribution},
               {"zero_contribution", r.zero_contribution},
               {"prime_side", r.prime_side},
               {"W_p_total", r.W_p_total},
               {"W_infty", r.W_infty},
               {"residual", r.residual},
               {"budgets", budgets_json(r.budgets)},
               {"within_budget", r.within_budget},
               {"w_infty_detail",
                {{"duality", w.duality},
                 {"duality_error", w.duality_error},
                 {"gamma_route", w.gamma_route},
                 {"gamma_route_error", w.gamma_route_error},
                 {"pv_raw", w.pv_raw},
                 {"pv_error", w.pv_error},
                 {"c_infty", w.c_infty},
                 {"f_at_1", w.f_at_1},
                 {"pv_calibrated", w.pv_calibrated}}},
               {"max_imag_residue", r.max_imag_residue},
               {"status", r.status},
               {"tolerance", tol}};
  o.pass = r.residual < tol && r.within_budget;
  return o;
}

Outcome dispatch(const RunConfig& c, std::ostream& log) {
  switch (c.command) {
    case Command::mellin: return run_mellin(c);
    case Command::zeta:
    case Command::xi:
    case Command::lchi: return run_scalar(c);
    case Command::zeros: return run_zeros(c);
    case Command::check_poisson: return run_poisson(c);
    case Command::check_zspectral: return run_zspectral(c);
    case Command::check_twisted_poisson: return run_twisted(c);
    case Command::check_trace_lemma: return run_trace(c);
    case Command::check_phi_identity: return run_phi(c);
    case Command::verify_explicit_formula: return run_explicit(c, log);
  }
  fail(ErrorKind::config, "unknown command");
}

void emit(const RunConfig& c, const json& report, std::ostream& log) {
  std::string text = report.dump(2);
  if (c.report.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(c.report);
  if (!out) {
    log << "error: cannot write report " << c.report << "\n";
    std::cout << text << "\n";
    return;
  }
  out << text << "\n";
}

}  // namespace

const char* to_string(Command c) {
  for (auto& [k, name] : command_names)
    if (k == c) return name;
  return "?";
}

std::optional<Command> command_from_string(const std::string& name) {
  for (auto& [k, n] : command_names)
    if (name == n) return k;
  return std::nullopt;
}

TruncationSpec parse_truncation(const std::string& text) {
  TruncationSpec t;
  for (auto& [k, v] : key_values(text, "--trunc")) {
    if (k == "n_max")
      t.n_max = std::size_t(v);
    else if (k == "p_max")
      t.p_max = std::size_t(v);
    else if (k == "e_max")
      t.e_max = int(v);
    else if (k == "tail_tol")
      t.tail_tol = v;
    else
      fail(ErrorKind::config, "--trunc: unknown key '" + k + "'");
  }
  t.validate();
  return t;
}

QuadratureSpec parse_quadrature(const std::string& text) {
  QuadratureSpec q;
  for (auto& [k, v] : key_values(text, "--quad")) {
    if (k == "u_min")
      q.u_min = v;
    else if (k == "u_max")
      q.u_max = v;
    else if (k == "n" || k == "n_points")
      q.n_points = std::size_t(v);
    else if (k == "tol" || k == "tolerance")
      q.tolerance = v;
    else
      fail(ErrorKind::config, "--quad: unknown key '" + k + "'");
  }
  q.validate();
  return q;
}

RunConfig parse_args(int argc, const char* const* argv) {
  // "check poisson" and "verify explicit-formula" are accepted for check-poisson etc.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  if (args.size() >= 2 && (args[0] == "check" || args[0] == "verify")) {
    args[0] += "-" + args[1];
    args.erase(args.begin() + 1);
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

  RunConfig c;
  std::string command, trunc, quad, s_text, x_text;
  double tol = 0;
  std::size_t primes = 0;
  int e_max = 0;
  CLI::App app{"Numerical checks of the Weil explicit formula", "weil"};
  app.set_config("--config", "", "plain-text config file (key = value); flags override it");
  app.add_option("command", command, "mellin|zeta|xi|lchi|zeros|check-poisson|check-zspectral|"
                                     "check-twisted-poisson|check-trace-lemma|check-phi-identity|"
                                     "verify-explicit-formula")
      ->required();
  app.add_option("--f", c.f, "test function expression");
  app.add_option("--f0", c.f0, "first factor (trace lemma)");
  app.add_option("--f1", c.f1, "second factor (trace lemma)");
  app.add_option("--s", s_text, "complex argument re,im");
  app.add_option("--x", x_text, "comma-separated evaluation points");
  app.add_option("--modulus", c.modulus, "character modulus");
  app.add_option("--index", c.index, "index into the primitive characters of the modulus");
  app.add_option("--trunc", trunc, "n_max=..,p_max=..,e_max=..,tail_tol=..");
  app.add_option("--quad", quad, "u_min=..,u_max=..,n=..,tol=..");
  app.add_option("--zeros", c.zeros, "zero table path or auto:T");
  app.add_option("--primes", primes, "largest prime on the geometric side");
  app.add_option("--e-max", e_max, "largest prime power exponent");
  app.add_option("--max-height", c.max_height, "zero search height");
  app.add_option("--precision", c.precision, "zero ordinate precision");
  app.add_option("--n", c.grid_n, "kernel grid size");
  app.add_option("--window", c.window, "kernel grid half-width U in ln x");
  app.add_option("--phi-width", c.phi_width, "transition width of phi");
  app.add_option("--tolerance", tol, "override the pass tolerance");
  app.add_option("--out", c.out, "zero table output path");
  app.add_option("--report", c.report, "JSON report path (stdout if omitted)");
  app.add_flag("-v,--verbose", c.verbosity, "more diagnostics on stderr");

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    throw;
  } catch (const CLI::ParseError& e) {
    fail(ErrorKind::config, e.what());
  }

  auto cmd = command_from_string(command);
  if (!cmd) fail(ErrorKind::config, "unknown command '" + command + "'");
  c.command = *cmd;
  if (!trunc.empty()) c.trunc = parse_truncation(trunc);
  if (primes) c.trunc.p_max = primes;
  if (e_max) c.trunc.e_max = e_max;
  c.trunc.validate();
  if (!quad.empty()) {
    c.quad = parse_quadrature(quad);
    c.quad_given = true;
  }
  auto numbers = [](const std::string& t, const char* what) {
    std::vector<double> v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      char* end = nullptr;
      double x = std::strtod(item.c_str(), &end);
      if (item.empty() || *end != '\0') fail(ErrorKind::config, std::string(what) + ": bad number '" + item + "'");
      v.push_back(x);
    }
    return v;
  };
  if (!s_text.empty()) {
    c.s = numbers(s_text, "--s");
    if (c.s.size() == 1) c.s.push_back(0.0);
    if (c.s.size() != 2) fail(ErrorKind::config, "--s takes re,im");
  }
  if (!x_text.empty()) c.x = numbers(x_text, "--x");
  if (app.count("--tolerance")) c.tolerance = tol;

  bool needs_f = c.command == Command::mellin || c.command == Command::check_zspectral ||
                 c.command == Command::verify_explicit_formula;
  if (needs_f && c.f.empty()) fail(ErrorKind::config, std::string(to_string(c.command)) + " needs --f");
  if (c.command == Command::check_trace_lemma && (c.f0.empty() || c.f1.empty()) && c.f.empty())
    fail(ErrorKind::config, "check-trace-lemma needs --f0 and --f1");
  if ((c.command == Command::lchi || c.command == Command::check_twisted_poisson) && c.modulus < 3)
    fail(ErrorKind::config, "--modulus d (d >= 3) is required");
  return c;
}

int run(const RunConfig& c, std::ostream& log) {
  auto t0 = std::chrono::steady_clock::now();
  json report{{"inputs", inputs_json(c)}};
  int status = exit_ok;
  try {
    Outcome o = dispatch(c, log);
    report["outputs"] = o.outputs;
    status = o.pass ? exit_ok : exit_tolerance;
    report["status"] = o.pass ? "ok" : "tolerance-failure";
  } catch (const NumericError& e) {
    status = exit_for(e.kind());
    report["status"] = "error";
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    log << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
  } catch (const std::exception& e) {
    status = exit_certification;
    report["status"] = "error";
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    log << "error: " << e.what() << "\n";
  }
  report["exit_status"] = status;
  report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(c, report, log);
  return status;
}

int cli_main(int argc, const char* const* argv) {
  RunConfig c;
  try {
    c = parse_args(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return exit_ok;
  } catch (const NumericError& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_config;
  }
  return run(c, std::cerr);
}

}  // namespace weil
