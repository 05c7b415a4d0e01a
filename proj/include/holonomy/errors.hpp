#pragma once

#include <stdexcept>
#include <string>

namespace holonomy {

// Stable error identifiers. The C API maps these 1:1 onto holo_status
// values, so the numbering here must not be reordered.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  not_normalized = 2,
  invalid_axis = 3,
  step_too_large = 4,
  non_convergent = 5,
  undefined_phase = 6,
  estimator_mismatch = 7,
  invalid_tangle = 8,
  degenerate_schmidt = 9,
  not_maximally_entangled = 10,
  leaves_mes_manifold = 11,
  phase_undetermined = 12,
  degenerate_grid = 13,
  no_reference = 14,
  invalid_counts = 15,
  decomposition_mismatch = 16,
  io_error = 17,
  internal = 18,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace holonomy
