#pragma once

#include <stdexcept>
#include <string>

namespace logrank {

enum class Errc {
  invalid_modulus,
  invalid_argument,
  dimension_mismatch,
  out_of_range,
  too_large,
  not_1_a_strong,
  not_dot_rep,
  verification_failure,
  unsupported_modulus,
  zero_function,
  invariant_violation,
  parse_error,
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_modulus: return "invalid-modulus";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::out_of_range: return "out-of-range";
    case Errc::too_large: return "too-large";
    case Errc::not_1_a_strong: return "not-1-a-strong";
    case Errc::not_dot_rep: return "not-dot-representation";
    case Errc::verification_failure: return "verification-failure";
    case Errc::unsupported_modulus: return "unsupported-modulus";
    case Errc::zero_function: return "zero-function";
    case Errc::invariant_violation: return "invariant-violation";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace logrank
