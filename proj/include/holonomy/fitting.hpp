#pragma once

// Fringe analysis: linear least squares on the {1, cos 2phi, sin 2phi}
// basis (the coincidence model is exactly linear in these coordinates),
// with one Poisson-reweighted pass, plus the s = 0 reference calibration.

#include <cstdint>
#include <span>
#include <vector>

#include "holonomy/errors.hpp"

namespace holonomy {

struct FringePoint {
  double phi = 0.0;     // interferometer phase, radians
  double counts = 0.0;  // Poisson draws are integers; noiseless data is real
};

struct FringeData {
  std::vector<FringePoint> points;
  double alpha = 0.0;
  double s = 0.0;
  std::uint64_t seed = 0;
};

struct FitResult {
  double baseline = 0.0;      // A
  double amplitude = 0.0;     // |B|, fringe amplitude
  double phase = 0.0;         // (-pi, pi]
  double visibility = 0.0;    // amplitude / baseline
  double residual_rms = 0.0;
  double phase_stderr = 0.0;  // linearized, Poisson-weighted
};

// Requires >= 5 points with phi distinct mod pi (degenerate_grid
// otherwise); phase_undetermined when amplitude/baseline < 1e-6.
FitResult fit_sinusoid(const FringeData& data);

struct FitRecord {
  FitResult fit;
  double alpha = 0.0;
  double s = 0.0;
};

// Circular mean of the fitted phases of s = 0 runs; this defines the
// phi = 0 origin. no_reference on empty input, invalid_argument when a run
// has s != 0.
double calibrate_reference(const std::vector<FitRecord>& runs);

// (fitted phase - reference) wrapped to (-pi, pi].
double extract_holonomic(const FitResult& fit, double reference);

double circular_mean(std::span<const double> phases);

}  // namespace holonomy
