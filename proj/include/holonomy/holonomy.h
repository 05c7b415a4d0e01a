#ifndef HOLONOMY_H
#define HOLONOMY_H

/*
 * C interface to the two-qubit holonomic-phase simulation library.
 *
 * Every function returns a holo_status (HOLO_OK on success) and writes its
 * results through out-parameters. Handles returned by *_create functions
 * own their data and must be released with the matching *_destroy.
 *
 * Angles are radians throughout. The preparation state behind (alpha, s)
 * entry points is cos(alpha/2)|HH> + sin(alpha/2)|VV>, evolved by the
 * three-plate interferometer unitary with opening angle s on both qubits.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HOLONOMY_API __declspec(dllexport)
#else
#define HOLONOMY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t holo_status;

enum {
  HOLO_OK = 0,
  HOLO_ERR_INVALID_ARGUMENT = 1,
  HOLO_ERR_NOT_NORMALIZED = 2,
  HOLO_ERR_INVALID_AXIS = 3,
  HOLO_ERR_STEP_TOO_LARGE = 4,
  HOLO_ERR_NON_CONVERGENT = 5,
  HOLO_ERR_UNDEFINED_PHASE = 6,
  HOLO_ERR_ESTIMATOR_MISMATCH = 7,
  HOLO_ERR_INVALID_TANGLE = 8,
  HOLO_ERR_DEGENERATE_SCHMIDT = 9,
  HOLO_ERR_NOT_MAX_ENTANGLED = 10,
  HOLO_ERR_LEAVES_MES = 11,
  HOLO_ERR_PHASE_UNDETERMINED = 12,
  HOLO_ERR_DEGENERATE_GRID = 13,
  HOLO_ERR_NO_REFERENCE = 14,
  HOLO_ERR_INVALID_COUNTS = 15,
  HOLO_ERR_DECOMPOSITION_MISMATCH = 16,
  HOLO_ERR_IO = 17,
  HOLO_ERR_INTERNAL = 18
};

HOLONOMY_API const char* holo_version(void);
HOLONOMY_API const char* holo_status_name(holo_status status);

/* ---- phases ---------------------------------------------------------- */

typedef struct holo_phase_result {
  double pancharatnam_wrapped;
  double pancharatnam_unwrapped;
  double dynamical;
  double holonomic_wrapped;
  double holonomic_unwrapped;
  double overlap_magnitude;
  double closed_form;      /* arg(cos 2s - i cos(alpha) sin 2s); NaN at the
                              undefined transition point */
  double visibility;       /* |overlap| from the closed form */
  double dyn_segment_max;  /* max |dynamical phase| over the three segments */
  int32_t endpoint_defined;
} holo_phase_result;

/* Numerical pipeline + closed forms for the preparation state at
 * (alpha, s). samples_per_segment <= 0 selects the default (1024).
 * Returns HOLO_ERR_UNDEFINED_PHASE at alpha = pi/2, s = pi/4. */
HOLONOMY_API holo_status holo_phase_point(double alpha, double s,
                                          int32_t samples_per_segment,
                                          holo_phase_result* out);

HOLONOMY_API holo_status holo_closed_experiment_phase(double alpha, double s,
                                                      double* out);
HOLONOMY_API holo_status holo_closed_entanglement_phase(double tangle,
                                                        double* out);

/* Full Schmidt evolution at tangle T: closed form and the numerical
 * unwrapped holonomic phase (computational Schmidt basis at T = 1). */
HOLONOMY_API holo_status holo_schmidt_point(double tangle,
                                            int32_t samples_per_segment,
                                            double* closed_out,
                                            double* numeric_out);

HOLONOMY_API holo_status holo_wrap_pi(double phase, double* out);

/* ---- coincidence model and fitting ----------------------------------- */

typedef struct holo_coincidence_model {
  double max_counts;      /* N  */
  double background;      /* N0 */
  double visibility;      /* v_t */
  double holonomic_phase; /* fringe offset */
} holo_coincidence_model;

HOLONOMY_API holo_status holo_experiment_model(double alpha, double s,
                                               double n_max, double n_background,
                                               holo_coincidence_model* out);
HOLONOMY_API holo_status holo_expected_counts(const holo_coincidence_model* model,
                                              double phi, double* out);
HOLONOMY_API holo_status holo_visibility_theory(double alpha, double s, double* out);
HOLONOMY_API holo_status holo_experimental_visibility(double v_t, double n_max,
                                                      double n_background, double* out);

/* Poisson fringe draw; counts_out[k] is an integer value stored in a
 * double. Identical seeds give identical draws. */
HOLONOMY_API holo_status holo_sample_fringe(const holo_coincidence_model* model,
                                            const double* phi, int32_t n,
                                            uint64_t seed, double* counts_out);

typedef struct holo_fit_result {
  double baseline;
  double amplitude;
  double phase;
  double visibility;
  double residual_rms;
  double phase_stderr;
} holo_fit_result;

HOLONOMY_API holo_status holo_fit_sinusoid(const double* phi, const double* counts,
                                           int32_t n, holo_fit_result* out);
HOLONOMY_API holo_status holo_circular_mean(const double* phases, int32_t n,
                                            double* out);

/* Deterministic per-(row, repetition) stream seed derivation. */
HOLONOMY_API uint64_t holo_seed_mix(uint64_t master, uint64_t index);

/* ---- SO(3)-ball traces ------------------------------------------------ */

typedef struct holo_ball_trace holo_ball_trace; /* opaque */

typedef struct holo_ball_point {
  double t;
  double r_x, r_y, r_z;
  int32_t segment_index;
  int32_t crossing_flag;
} holo_ball_point;

/* Experiment evolution of (|HH> + |VV>)/sqrt(2) at opening angle s. */
HOLONOMY_API holo_status holo_trace_experiment(double s, int32_t samples_per_segment,
                                               holo_ball_trace** out);
/* Schmidt evolution of the same state, computational basis, 0 -> theta_max. */
HOLONOMY_API holo_status holo_trace_schmidt(double theta_max,
                                            int32_t samples_per_segment,
                                            holo_ball_trace** out);
HOLONOMY_API int32_t holo_ball_trace_size(const holo_ball_trace* trace);
HOLONOMY_API holo_status holo_ball_trace_point(const holo_ball_trace* trace,
                                               int32_t index, holo_ball_point* out);
HOLONOMY_API int32_t holo_ball_trace_crossings(const holo_ball_trace* trace);
HOLONOMY_API int32_t holo_ball_trace_grazes(const holo_ball_trace* trace);
HOLONOMY_API double holo_ball_trace_topological_phase(const holo_ball_trace* trace);
HOLONOMY_API void holo_ball_trace_destroy(holo_ball_trace* trace);

/* ---- local Bloch projections ------------------------------------------ */

typedef struct holo_projection_trace holo_projection_trace; /* opaque */

typedef struct holo_projection_point {
  double t;
  int32_t segment_index;
  double a_x, a_y, a_z; /* reduced Bloch vector of qubit a */
  double b_x, b_y, b_z; /* reduced Bloch vector of qubit b */
} holo_projection_point;

HOLONOMY_API holo_status holo_trace_projections(double alpha, double s,
                                                int32_t samples_per_segment,
                                                holo_projection_trace** out);
HOLONOMY_API int32_t holo_projection_trace_size(const holo_projection_trace* trace);
HOLONOMY_API holo_status holo_projection_trace_point(const holo_projection_trace* trace,
                                                     int32_t index,
                                                     holo_projection_point* out);
HOLONOMY_API void holo_projection_trace_destroy(holo_projection_trace* trace);

/* ---- self checks ------------------------------------------------------ */

typedef struct holo_verify_report holo_verify_report; /* opaque */

HOLONOMY_API holo_status holo_verify_run(int32_t inject_plate_fault,
                                         holo_verify_report** out);
HOLONOMY_API int32_t holo_verify_size(const holo_verify_report* report);
HOLONOMY_API holo_status holo_verify_item(const holo_verify_report* report,
                                          int32_t index, const char** name,
                                          double* residual, double* tolerance,
                                          int32_t* pass);
HOLONOMY_API int32_t holo_verify_all_pass(const holo_verify_report* report);
HOLONOMY_API void holo_verify_destroy(holo_verify_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HOLONOMY_H */
