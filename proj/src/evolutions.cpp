#include "holonomy/evolutions.hpp"

#include <cmath>

namespace holonomy {

namespace {

constexpr double kOverlapArgLimit = kPi / 2.0;

// Closed-form exp(-i t H) for Hermitian 2x2 H, via H = c0 I + v . sigma.
Mat2 hermitian_exp(const Mat2& h, double t) {
  const double c0 = 0.5 * (h.at(0, 0).real() + h.at(1, 1).real());
  const Vec3 v{0.5 * (h.at(0, 0).real() - h.at(1, 1).real()),
               h.at(0, 1).real(), -h.at(0, 1).imag()};
  const double vn = v.norm();
  Mat2 rot;
  if (vn < 1e-15) {
    rot = Mat2::identity();
  } else {
    rot = su2_exp(v.normalized(), 2.0 * vn * t);
  }
  return rot * std::exp(Complex(0.0, -c0 * t));
}

Segment make_segment(const Mat2& gen_a, const Mat2& gen_b, double duration) {
  if (!is_hermitian(gen_a) || !is_hermitian(gen_b))
    raise(ErrorCode::invalid_argument, "segment generators must be Hermitian");
  return Segment{gen_a, gen_b, duration};
}

// Projective rotation generator eta(|k><k| - |k'><k'|)/2 for one qubit.
Mat2 schmidt_generator(const Vec2c& k, const Vec2c& k_perp, int eta) {
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      g.at(i, j) = 0.5 * static_cast<double>(eta) *
                   (k[static_cast<size_t>(i)] * std::conj(k[static_cast<size_t>(j)]) -
                    k_perp[static_cast<size_t>(i)] * std::conj(k_perp[static_cast<size_t>(j)]));
  // Clean the tiny anti-Hermitian rounding residue so the invariant holds exactly.
  Mat2 h = (g + g.dagger()) * 0.5;
  return h;
}

int required_samples(const Segment& seg, int requested) {
  // The consecutive-overlap argument per step is bounded by
  // dt * (||G_a|| + ||G_b||); keep it at or below pi/4 for headroom and to
  // rule out whole-period aliasing (the sampled check alone cannot see a
  // full-period jump). Exceeding the cap is a hard failure: the empirical
  // check is blind precisely in this regime.
  const double rate = hermitian_spectral_norm(seg.gen_a) + hermitian_spectral_norm(seg.gen_b);
  int n = requested;
  while (rate * std::abs(seg.duration) / n > kPi / 4.0) {
    if (n >= kMaxSamplesPerSegment)
      raise(ErrorCode::non_convergent,
            "generator too fast for the 2^20 per-segment sampling cap");
    n *= 2;
  }
  return n;
}

bool overlap_args_ok(const std::vector<TrajectorySample>& samples) {
  for (size_t k = 0; k + 1 < samples.size(); ++k) {
    const Complex ov = inner(samples[k].state.amp, samples[k + 1].state.amp);
    if (std::abs(std::arg(ov)) >= kOverlapArgLimit) return false;
  }
  return true;
}

std::vector<TrajectorySample> sample_with(const Trajectory& trajectory, int per_segment) {
  std::vector<TrajectorySample> samples;
  samples.reserve(trajectory.segments.size() * static_cast<size_t>(per_segment + 1));
  TwoQubitState state = trajectory.initial;
  double t_base = 0.0;
  int seg_index = 0;
  for (const Segment& seg : trajectory.segments) {
    const double dt = seg.duration / per_segment;
    const Mat4 step = kron(hermitian_exp(seg.gen_a, dt), hermitian_exp(seg.gen_b, dt));
    TwoQubitState cur = state;
    samples.push_back({t_base, seg_index, cur});
    for (int k = 1; k <= per_segment; ++k) {
      cur.amp = mul(step, cur.amp);
      samples.push_back({t_base + dt * k, seg_index, cur});
    }
    // Close the segment on the exact matrix endpoint to keep junctions consistent.
    TwoQubitState exact = state;
    exact.amp = mul(kron(hermitian_exp(seg.gen_a, seg.duration),
                         hermitian_exp(seg.gen_b, seg.duration)),
                    state.amp);
    samples.back().state = exact;
    state = exact;
    t_base += seg.duration;
    ++seg_index;
  }
  return samples;
}

}  // namespace

Trajectory schmidt_evolution(const SchmidtForm& form, double theta_max,
                             int samples_per_segment) {
  if (form.eta == 0)
    raise(ErrorCode::degenerate_schmidt,
          "degenerate Schmidt form: provide an explicit basis via mes_form()");
  const Mat2 gen_a = schmidt_generator(form.basis_a[0], form.basis_a[1], form.eta);
  const Mat2 gen_b = schmidt_generator(form.basis_b[0], form.basis_b[1], form.eta);
  Trajectory traj;
  traj.initial = form.reconstruct();
  traj.segments = {make_segment(gen_a, gen_b, theta_max)};
  traj.samples_per_segment = samples_per_segment;
  return traj;
}

Mat2 experiment_unitary(double s) {
  const Mat2 outer = su2_exp({0.0, 1.0, 0.0}, -kPi / 2.0);  // exp(+i pi/4 sigma2)
  const Mat2 middle = su2_exp({std::sin(s), std::cos(s), 0.0}, kPi);
  return outer * middle * outer;
}

Trajectory experiment_trajectory(const TwoQubitState& initial, double s,
                                 int samples_per_segment) {
  if (s < -1e-12 || s > kPi / 2.0 + 1e-12)
    raise(ErrorCode::invalid_argument, "opening angle s must lie in [0, pi/2]");
  const Mat2 minus_half_sigma2 = kSigma2 * Complex(-0.5, 0.0);
  const Mat2 middle_gen =
      pauli_combo({std::sin(s), std::cos(s), 0.0}) * Complex(0.5, 0.0);

  Trajectory traj;
  traj.initial = initial;
  traj.segments = {
      make_segment(minus_half_sigma2, minus_half_sigma2, kPi / 2.0),
      make_segment(middle_gen, middle_gen, kPi),
      make_segment(minus_half_sigma2, minus_half_sigma2, kPi / 2.0),
  };
  traj.samples_per_segment = samples_per_segment;
  return traj;
}

TwoQubitState endpoint(const Trajectory& trajectory) {
  TwoQubitState state = trajectory.initial;
  for (const Segment& seg : trajectory.segments) {
    const Mat4 u = kron(hermitian_exp(seg.gen_a, seg.duration),
                        hermitian_exp(seg.gen_b, seg.duration));
    state.amp = mul(u, state.amp);
  }
  return state;
}

SampledTrajectory sample(const Trajectory& trajectory) {
  int per_segment = trajectory.samples_per_segment;
  if (per_segment < 2) per_segment = 2;
  if (per_segment % 2 != 0) ++per_segment;  // even interval counts (Simpson, half-grid checks)
  for (const Segment& seg : trajectory.segments)
    per_segment = required_samples(seg, per_segment);

  while (true) {
    std::vector<TrajectorySample> samples = sample_with(trajectory, per_segment);
    if (overlap_args_ok(samples))
      return SampledTrajectory{std::move(samples), per_segment};
    if (per_segment >= kMaxSamplesPerSegment)
      raise(ErrorCode::non_convergent,
            "sampling refinement cap (2^20 points per segment) exceeded");
    per_segment *= 2;
  }
}

SampledTrajectory sample_exact(const Trajectory& trajectory) {
  const int per_segment = trajectory.samples_per_segment;
  for (const Segment& seg : trajectory.segments) {
    if (required_samples(seg, per_segment) != per_segment)
      raise(ErrorCode::step_too_large,
            "requested sampling violates the overlap-argument invariant");
  }
  std::vector<TrajectorySample> samples = sample_with(trajectory, per_segment);
  if (!overlap_args_ok(samples))
    raise(ErrorCode::step_too_large,
          "requested sampling violates the overlap-argument invariant");
  return SampledTrajectory{std::move(samples), per_segment};
}

}  // namespace holonomy
