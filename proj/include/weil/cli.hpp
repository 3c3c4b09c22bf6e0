// Command-line front end: configuration, dispatch, JSON reports, exit codes.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weil/quadrature.hpp"
#include "weil/zeta_operators.hpp"

namespace weil {

enum class Command {
  mellin,
  zeta,
  xi,
  lchi,
  zeros,
  check_poisson,
  check_zspectral,
  check_twisted_poisson,
  check_trace_lemma,
  check_phi_identity,
  verify_explicit_formula
};

const char* to_string(Command c);
std::optional<Command> command_from_string(const std::string& name);

enum ExitStatus { exit_ok = 0, exit_tolerance = 1, exit_config = 2, exit_certification = 3 };

struct RunConfig {
  Command command = Command::mellin;
  std::string f;                     // test function or parity function expression
  std::string f0, f1;                // trace lemma pair
  std::vector<double> s = {2.0, 0.0};  // re, im
  std::vector<double> x;             // evaluation points (command default when empty)
  int modulus = 0;
  int index = 0;
  TruncationSpec trunc;
  QuadratureSpec quad;
  bool quad_given = false;
  std::string zeros;                 // path or auto:T
  double max_height = 60.0;
  double precision = 1e-12;
  std::size_t grid_n = 2048;
  double window = 8.0;
  double phi_width = 1.0;
  std::optional<double> tolerance;   // overrides the command default
  std::string out;                   // zero table output
  std::string report;                // JSON report path; stdout when empty
  int verbosity = 0;
};

// parses argv (flags override an optional --config file); throws NumericError(config/parse_error)
RunConfig parse_args(int argc, const char* const* argv);
// writes the JSON report and returns the exit status; never throws
int run(const RunConfig& cfg, std::ostream& log);
// parse + run with diagnostics on stderr
int cli_main(int argc, const char* const* argv);

// "n_max=1e6,p_max=1e4,e_max=60,tail_tol=1e-13"; missing keys keep their defaults
TruncationSpec parse_truncation(const std::string& text);
// "u_min=-40,u_max=40,n=8193,tol=1e-10"
QuadratureSpec parse_quadrature(const std::string& text);

}  // namespace weil
