#pragma once

// Phase engine: Pancharatnam, dynamical and holonomic phases of a sampled
// bilocal evolution, plus the closed forms they must reproduce.
//
// Conventions
//   * Pancharatnam phase: arg<psi(0)|psi(tau)>, wrapped to (-pi, pi].
//   * Dynamical phase: Im integral <psi|d psi/dt> dt = -integral <G_tot> dt
//     for the piecewise generators used here.
//   * Holonomic phase: Pancharatnam minus dynamical.
//   * The "unwrapped" Pancharatnam value is the continuity lift of
//     arg<psi(0)|psi(t_k)> over the samples. Samples whose overlap with the
//     initial state has magnitude below 1e-6 are bridged over, and a bridge
//     step within 1e-9 of pi (the overlap passing through zero on a straight
//     line, which happens exactly on the maximally entangled manifold) is
//     resolved to -pi. That choice continues the T -> 1 limit of the
//     entangled family, whose winding is negative for eta = +1.

#include "holonomy/evolutions.hpp"

namespace holonomy {

struct PhaseDecomposition {
  double pancharatnam_wrapped = 0.0;    // (-pi, pi]
  double pancharatnam_unwrapped = 0.0;  // continuity lift
  double dynamical = 0.0;
  double holonomic_wrapped = 0.0;       // (-pi, pi]
  double holonomic_unwrapped = 0.0;
  double overlap_magnitude = 0.0;       // |<psi(0)|psi(tau)>|
  // False when the endpoint overlap magnitude is below 1e-9; the wrapped
  // values then refer to the last sample with a well-defined phase.
  bool endpoint_defined = true;
};

// arg<initial|final>; undefined_phase when the overlap magnitude < 1e-9.
double pancharatnam(const TwoQubitState& initial, const TwoQubitState& final_state);

// Composite-Simpson quadrature of -<G_a (x) I + I (x) G_b> per segment,
// cross-checked against the (Richardson-accelerated) finite-difference
// estimate Im sum <psi_k|psi_{k+1} - psi_k>; estimator_mismatch if the two
// disagree by more than 1e-6.
double dynamical_phase(const Trajectory& trajectory);
double dynamical_phase(const Trajectory& trajectory, const SampledTrajectory& sampled);

// Per-segment dynamical phases (same quadrature and cross-check).
std::vector<double> segment_dynamical_phases(const Trajectory& trajectory,
                                             const SampledTrajectory& sampled);

PhaseDecomposition holonomic_phase(const Trajectory& trajectory);
PhaseDecomposition holonomic_phase(const Trajectory& trajectory,
                                   const SampledTrajectory& sampled);

// -2pi (1 - sqrt(1 - T)), the holonomic phase of a full Schmidt evolution
// at tangle T; invalid_tangle outside [0, 1].
double entanglement_phase_closed(double tangle_value);

// arg(cos 2s - i cos(alpha) sin 2s) in (-pi, pi], the holonomic phase of
// the interferometer evolution. Exactly 0 / pi on the maximally entangled
// line (|cos alpha| <= 1e-12) depending on the sign of cos 2s, and
// undefined_phase at the transition point cos 2s = cos alpha = 0.
double experiment_phase_closed(double alpha, double s);

}  // namespace holonomy
