#include "holonomy/holonomy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "holonomy/fitting.hpp"
#include "holonomy/optics.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/rng.hpp"
#include "holonomy/topology.hpp"
#include "holonomy/verify.hpp"
#include "holonomy/version.hpp"

using namespace holonomy;

static_assert(HOLO_ERR_INVALID_ARGUMENT == static_cast<int>(ErrorCode::invalid_argument));
static_assert(HOLO_ERR_DECOMPOSITION_MISMATCH ==
              static_cast<int>(ErrorCode::decomposition_mismatch));
static_assert(HOLO_ERR_INTERNAL == static_cast<int>(ErrorCode::internal));

namespace {

template <typename Fn>
holo_status guarded(Fn&& fn) {
  try {
    fn();
    return HOLO_OK;
  } catch (const Error& e) {
    return static_cast<holo_status>(e.code());
  } catch (const std::exception&) {
    return HOLO_ERR_INTERNAL;
  }
}

int resolve_samples(int32_t requested) {
  return requested > 0 ? requested : kDefaultSamplesPerSegment;
}

}  // namespace

struct holo_ball_trace {
  HomotopyRecord record;
};

struct holo_projection_trace {
  std::vector<holo_projection_point> points;
};

struct holo_verify_report {
  std::vector<CheckResult> checks;
};

extern "C" {

const char* holo_version(void) { return kVersionString; }

const char* holo_status_name(holo_status status) {
  return error_code_name(static_cast<ErrorCode>(status));
}

holo_status holo_phase_point(double alpha, double s, int32_t samples_per_segment,
                             holo_phase_result* out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const Trajectory traj = experiment_trajectory(TwoQubitState::preparation(alpha),
                                                  s, resolve_samples(samples_per_segment));
    const SampledTrajectory sampled = sample(traj);
    const PhaseDecomposition dec = holonomic_phase(traj, sampled);

    out->pancharatnam_wrapped = dec.pancharatnam_wrapped;
    out->pancharatnam_unwrapped = dec.pancharatnam_unwrapped;
    out->dynamical = dec.dynamical;
    out->holonomic_wrapped = dec.holonomic_wrapped;
    out->holonomic_unwrapped = dec.holonomic_unwrapped;
    out->overlap_magnitude = dec.overlap_magnitude;
    out->endpoint_defined = dec.endpoint_defined ? 1 : 0;
    out->visibility = visibility_theory(alpha, s);

    double dyn_max = 0.0;
    for (double d : segment_dynamical_phases(traj, sampled))
      dyn_max = std::max(dyn_max, std::abs(d));
    out->dyn_segment_max = dyn_max;

    try {
      out->closed_form = experiment_phase_closed(alpha, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::undefined_phase) throw;
      out->closed_form = std::numeric_limits<double>::quiet_NaN();
    }
    if (!dec.endpoint_defined)
      raise(ErrorCode::undefined_phase,
            "endpoint overlap vanishes; wrapped phase undefined");
  });
}

holo_status holo_closed_experiment_phase(double alpha, double s, double* out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = experiment_phase_closed(alpha, s); });
}

holo_status holo_closed_entanglement_phase(double tangle, double* out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = entanglement_phase_closed(tangle); });
}

holo_status holo_schmidt_point(double tangle, int32_t samples_per_segment,
                               double* closed_out, double* numeric_out) {
  if (!closed_out || !numeric_out) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *closed_out = entanglement_phase_closed(tangle);
    const double alpha = std::asin(std::sqrt(std::clamp(tangle, 0.0, 1.0)));
    const TwoQubitState state = TwoQubitState::preparation(alpha);
    SchmidtForm form = schmidt_decompose(state);
    if (form.degenerate) {
      const std::array<Vec2c, 2> basis{Vec2c{1.0, 0.0}, Vec2c{0.0, 1.0}};
      form = mes_form(basis, basis);
    }
    const Trajectory traj =
        schmidt_evolution(form, kTwoPi, resolve_samples(samples_per_segment));
    *numeric_out = holonomic_phase(traj).holonomic_unwrapped;
  });
}

holo_status holo_wrap_pi(double phase, double* out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  *out = wrap_pi(phase);
  return HOLO_OK;
}

holo_status holo_experiment_model(double alpha, double s, double n_max,
                                  double n_background, holo_coincidence_model* out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const CoincidenceModel model = experiment_model(alpha, s, n_max, n_background);
    out->max_counts = model.max_counts;
    out->background = model.background;
    out->visibility = model.visibility;
    out->holonomic_phase = model.holonomic_phase;
  });
}

holo_status holo_expected_counts(const holo_coincidence_model* model, double phi,
                                 double* out) {
  if (!model || !out) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const CoincidenceModel m{model->max_counts, model->background,
                             model->visibility, model->holonomic_phase};
    m.validate();
    *out = expected_counts(phi, m);
  });
}

holo_status holo_visibility_theory(double alpha, double s, double* out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  *out = visibility_theory(alpha, s);
  return HOLO_OK;
}

holo_status holo_experimental_visibility(double v_t, double n_max,
                                         double n_background, double* out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = experimental_visibility(v_t, n_max, n_background); });
}

holo_status holo_sample_fringe(const holo_coincidence_model* model, const double* phi,
                               int32_t n, uint64_t seed, double* counts_out) {
  if (!model || !phi || !counts_out || n <= 0) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const CoincidenceModel m{model->max_counts, model->background,
                             model->visibility, model->holonomic_phase};
    const auto counts =
        sample_counts(std::span<const double>(phi, static_cast<size_t>(n)), m, seed);
    for (int32_t k = 0; k < n; ++k)
      counts_out[k] = static_cast<double>(counts[static_cast<size_t>(k)]);
  });
}

holo_status holo_fit_sinusoid(const double* phi, const double* counts, int32_t n,
                              holo_fit_result* out) {
  if (!phi || !counts || !out || n <= 0) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    FringeData data;
    data.points.reserve(static_cast<size_t>(n));
    for (int32_t k = 0; k < n; ++k) data.points.push_back({phi[k], counts[k]});
    const FitResult fit = fit_sinusoid(data);
    out->baseline = fit.baseline;
    out->amplitude = fit.amplitude;
    out->phase = fit.phase;
    out->visibility = fit.visibility;
    out->residual_rms = fit.residual_rms;
    out->phase_stderr = fit.phase_stderr;
  });
}

holo_status holo_circular_mean(const double* phases, int32_t n, double* out) {
  if (!phases || !out || n < 0) return HOLO_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = circular_mean(std::span<const double>(phases, static_cast<size_t>(n)));
  });
}

uint64_t holo_seed_mix(uint64_t master, uint64_t index) { return seed_mix(master, index); }

holo_status holo_trace_experiment(double s, int32_t samples_per_segment,
                                  holo_ball_trace** out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const Trajectory traj = experiment_trajectory(TwoQubitState::bell_phi_plus(), s,
                                                  resolve_samples(samples_per_segment));
    *out = new holo_ball_trace{trace_ball(traj)};
  });
}

holo_status holo_trace_schmidt(double theta_max, int32_t samples_per_segment,
                               holo_ball_trace** out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const std::array<Vec2c, 2> basis{Vec2c{1.0, 0.0}, Vec2c{0.0, 1.0}};
    const Trajectory traj = schmidt_evolution(mes_form(basis, basis), theta_max,
                                              resolve_samples(samples_per_segment));
    *out = new holo_ball_trace{trace_ball(traj)};
  });
}

int32_t holo_ball_trace_size(const holo_ball_trace* trace) {
  return trace ? static_cast<int32_t>(trace->record.path.size()) : 0;
}

holo_status holo_ball_trace_point(const holo_ball_trace* trace, int32_t index,
                                  holo_ball_point* out) {
  if (!trace || !out || index < 0 ||
      index >= static_cast<int32_t>(trace->record.path.size()))
    return HOLO_ERR_INVALID_ARGUMENT;
  const BallSample& s = trace->record.path[static_cast<size_t>(index)];
  out->t = s.t;
  out->r_x = s.point.r.x;
  out->r_y = s.point.r.y;
  out->r_z = s.point.r.z;
  out->segment_index = s.segment;
  out->crossing_flag = s.crossing ? 1 : 0;
  return HOLO_OK;
}

int32_t holo_ball_trace_crossings(const holo_ball_trace* trace) {
  return trace ? trace->record.crossings : -1;
}

int32_t holo_ball_trace_grazes(const holo_ball_trace* trace) {
  return trace ? trace->record.grazes : -1;
}

double holo_ball_trace_topological_phase(const holo_ball_trace* trace) {
  return trace ? trace->record.topological_phase
               : std::numeric_limits<double>::quiet_NaN();
}

void holo_ball_trace_destroy(holo_ball_trace* trace) { delete trace; }

holo_status holo_trace_projections(double alpha, double s, int32_t samples_per_segment,
                                   holo_projection_trace** out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const Trajectory traj = experiment_trajectory(TwoQubitState::preparation(alpha),
                                                  s, resolve_samples(samples_per_segment));
    const SampledTrajectory sampled = sample(traj);
    auto trace = std::make_unique<holo_projection_trace>();
    trace->points.reserve(sampled.samples.size());
    for (const TrajectorySample& ts : sampled.samples) {
      const Vec3 a = reduced_bloch(ts.state, Qubit::a);
      const Vec3 b = reduced_bloch(ts.state, Qubit::b);
      trace->points.push_back({ts.t, ts.segment, a.x, a.y, a.z, b.x, b.y, b.z});
    }
    *out = trace.release();
  });
}

int32_t holo_projection_trace_size(const holo_projection_trace* trace) {
  return trace ? static_cast<int32_t>(trace->points.size()) : 0;
}

holo_status holo_projection_trace_point(const holo_projection_trace* trace,
                                        int32_t index, holo_projection_point* out) {
  if (!trace || !out || index < 0 ||
      index >= static_cast<int32_t>(trace->points.size()))
    return HOLO_ERR_INVALID_ARGUMENT;
  *out = trace->points[static_cast<size_t>(index)];
  return HOLO_OK;
}

void holo_projection_trace_destroy(holo_projection_trace* trace) { delete trace; }

holo_status holo_verify_run(int32_t inject_plate_fault, holo_verify_report** out) {
  if (!out) return HOLO_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    *out = new holo_verify_report{run_self_checks(inject_plate_fault != 0)};
  });
}

int32_t holo_verify_size(const holo_verify_report* report) {
  return report ? static_cast<int32_t>(report->checks.size()) : 0;
}

holo_status holo_verify_item(const holo_verify_report* report, int32_t index,
                             const char** name, double* residual, double* tolerance,
                             int32_t* pass) {
  if (!report || index < 0 || index >= static_cast<int32_t>(report->checks.size()))
    return HOLO_ERR_INVALID_ARGUMENT;
  const CheckResult& c = report->checks[static_cast<size_t>(index)];
  if (name) *name = c.name.c_str();
  if (residual) *residual = c.residual;
  if (tolerance) *tolerance = c.tolerance;
  if (pass) *pass = c.pass ? 1 : 0;
  return HOLO_OK;
}

int32_t holo_verify_all_pass(const holo_verify_report* report) {
  if (!report) return 0;
  for (const CheckResult& c : report->checks)
    if (!c.pass) return 0;
  return 1;
}

void holo_verify_destroy(holo_verify_report* report) { delete report; }

}  // extern "C"
