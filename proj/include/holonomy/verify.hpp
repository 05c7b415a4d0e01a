#pragma once

// Built-in consistency sweeps: plate decompositions, vanishing dynamical
// phase, SU(2) double cover, closed-form agreement and homotopy counts.
// Used by the CLI `verify` command.

#include <string>
#include <vector>

namespace holonomy {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// inject_plate_fault perturbs one half-wave-plate angle by 1e-3 rad, as a
// self-test that the checks actually detect convention errors.
std::vector<CheckResult> run_self_checks(bool inject_plate_fault = false);

}  // namespace holonomy
