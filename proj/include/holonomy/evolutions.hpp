#pragma once

// One-parameter bilocal evolutions: piecewise flows exp(-i t G_a) (x)
// exp(-i t G_b) with Hermitian generators, trajectory sampling with
// adaptive refinement, and the two evolution families of interest
// (rotations about the Schmidt basis, and the three-plate interferometer
// evolution U(s)).

#include <vector>

#include "holonomy/states.hpp"

namespace holonomy {

inline constexpr int kDefaultSamplesPerSegment = 1024;
inline constexpr int kMaxSamplesPerSegment = 1 << 20;

struct Segment {
  Mat2 gen_a;       // Hermitian to 1e-12
  Mat2 gen_b;
  double duration;  // flow parameter runs over [0, duration], radians
};

struct Trajectory {
  TwoQubitState initial;
  std::vector<Segment> segments;
  int samples_per_segment = kDefaultSamplesPerSegment;
};

struct TrajectorySample {
  double t = 0.0;   // global parameter (segment durations accumulated)
  int segment = 0;
  TwoQubitState state;
};

struct SampledTrajectory {
  std::vector<TrajectorySample> samples;  // includes both endpoints of every segment
  int samples_per_segment = 0;            // after refinement
};

// Rotation of both qubits about their Schmidt-basis directions:
// G_j = sigma_j / 2 with sigma_j = eta(|k_j><k_j| - |k_j'><k_j'|), the
// parameter running 0 -> theta_max (a full Schmidt evolution is 2pi).
// Requires eta != 0; build the form with mes_form() to pin the basis of a
// maximally entangled state.
Trajectory schmidt_evolution(const SchmidtForm& form, double theta_max,
                             int samples_per_segment = kDefaultSamplesPerSegment);

// exp(i pi/4 sigma2) exp(-i pi/2 (sigma1 sin s + sigma2 cos s)) exp(i pi/4 sigma2)
Mat2 experiment_unitary(double s);

// The same evolution as a three-segment trajectory (rightmost factor
// traversed first) applied bilocally, U(s) (x) U(s).
Trajectory experiment_trajectory(const TwoQubitState& initial, double s,
                                 int samples_per_segment = kDefaultSamplesPerSegment);

// Endpoint by direct composition of the segment exponentials.
TwoQubitState endpoint(const Trajectory& trajectory);

// Uniform per-segment sampling. Doubles the sampling while the
// consecutive-state overlap argument can reach pi/2 (both the a-priori
// generator-norm bound and the sampled overlaps are checked); raises
// non_convergent beyond 2^20 points per segment.
SampledTrajectory sample(const Trajectory& trajectory);

// Strict variant: raises step_too_large instead of refining.
SampledTrajectory sample_exact(const Trajectory& trajectory);

}  // namespace holonomy
