// Error kinds shared by every module. The CLI maps them to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace weil {

enum class ErrorKind {
  domain,
  pole,
  tolerance_not_met,
  window_too_small,
  divergent_integral,
  tail_bound_violation,
  parse_error,
  order_violation,
  count_mismatch,
  parity_mismatch,
  non_primitive_character,
  imaginary_residue,
  disagreement,
  budget_exceeded,
  config,
};

const char* to_string(ErrorKind k);

class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw NumericError(k, msg); }

}  // namespace weil
