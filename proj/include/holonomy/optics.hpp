#pragma once

// Jones-calculus retarders, the wave-plate realizations of the
// interferometer evolution, and the two-photon coincidence-fringe model
// with background-count correction.
//
// Retarder convention: jones_matrix = R(theta) diag(e^{-i d/2}, e^{+i d/2})
// R(-theta) with R a real rotation of the H/V frame. Any global phase
// between a plate product and the reference unitary is extracted and
// reported, never dropped: the fringe offset is the measurable quantity.

#include <cstdint>
#include <span>
#include <vector>

#include "holonomy/linalg.hpp"

namespace holonomy {

struct WavePlate {
  double retardance = kPi;  // pi: half-wave, pi/2: quarter-wave
  double angle = 0.0;       // optic-axis angle in the lab frame, radians
};

Mat2 jones_matrix(const WavePlate& plate);
Mat2 quarter_wave(double angle);
Mat2 half_wave(double angle);

// Q(-pi/4) H(pi/4 - s/2) Q(-pi/4)
Mat2 experiment_plate_product(double s);

struct PlateCheck {
  double residual = 0.0;      // max-norm of plates - e^{i gamma} reference
  double global_phase = 0.0;  // gamma minimizing the residual
};

// Compares the plate product against the directly exponentiated evolution;
// decomposition_mismatch above 1e-6.
PlateCheck verify_plate_decomposition(double s);

struct ArmPair {
  Mat2 u_breve;               // Q(-pi/4) H(pi/4 - s/4) Q(-pi/4)
  Mat2 u_hat;                 // Q(+pi/4) H(-pi/4 - s/4) Q(+pi/4)
  double global_phase = 0.0;  // gamma' with u_hat^dag u_breve = e^{i gamma'} U(s)
  double residual = 0.0;
};

ArmPair arm_unitaries(double s);

// sqrt(cos^2 2s + cos^2 alpha sin^2 2s) = |<psi|U(x)U|psi>|.
double visibility_theory(double alpha, double s);

struct CoincidenceModel {
  double max_counts = 0.0;       // N, reference fringe maximum
  double background = 0.0;       // N0, reference fringe minimum
  double visibility = 1.0;       // v_t in [0, 1]
  double holonomic_phase = 0.0;  // fringe offset, radians

  // (N - N0)/(N + N0); invalid_counts when N = N0 = 0.
  double reference_visibility() const;
  void validate() const;
};

// Model for the preparation state at (alpha, s) with count levels (N, N0).
// The fringe offset is taken from the arm decomposition, i.e. the closed
// form plus twice the reported plate global phase.
CoincidenceModel experiment_model(double alpha, double s, double n_max, double n_background);

// (N - N0)/2 [1 + v_t cos(2 phi - Phi_h)] + N0
double expected_counts(double phi, const CoincidenceModel& model);

// v_t (N - N0)/(N + N0)
double experimental_visibility(double v_t, double n_max, double n_background);

// Independent Poisson draws with means expected_counts(phi_k); identical
// seeds give identical draws.
std::vector<std::int64_t> sample_counts(std::span<const double> phi_grid,
                                        const CoincidenceModel& model,
                                        std::uint64_t seed);

}  // namespace holonomy
