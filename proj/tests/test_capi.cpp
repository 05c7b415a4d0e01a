// Exercises the shared-library surface: status codes, out-parameters and
// opaque handle lifecycles, as a client linking only holonomy.h would.

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "holonomy/holonomy.h"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("version and status names") {
  CHECK(holo_version() != nullptr);
  CHECK(std::string(holo_status_name(HOLO_OK)) == "Ok");
  CHECK(std::string(holo_status_name(HOLO_ERR_UNDEFINED_PHASE)) == "UndefinedPhase");
  CHECK(std::string(holo_status_name(HOLO_ERR_PHASE_UNDETERMINED)) == "PhaseUndetermined");
}

TEST_CASE("phase point round trip") {
  holo_phase_result r{};
  REQUIRE(holo_phase_point(0.0, 0.3, 0, &r) == HOLO_OK);
  CHECK(std::abs(r.holonomic_wrapped - (-0.6)) < 1e-8);
  CHECK(std::abs(r.closed_form - (-0.6)) < 1e-12);
  CHECK(std::abs(r.dynamical) < 1e-8);
  CHECK(r.endpoint_defined == 1);
  CHECK(r.dyn_segment_max < 1e-8);

  CHECK(holo_phase_point(kPi / 2.0, kPi / 4.0, 0, &r) == HOLO_ERR_UNDEFINED_PHASE);
  CHECK(holo_phase_point(0.0, 0.3, 0, nullptr) == HOLO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("closed forms through the C surface") {
  double v = 0.0;
  REQUIRE(holo_closed_entanglement_phase(0.75, &v) == HOLO_OK);
  CHECK(std::abs(v - (-kPi)) < 1e-12);
  CHECK(holo_closed_entanglement_phase(2.0, &v) == HOLO_ERR_INVALID_TANGLE);

  REQUIRE(holo_closed_experiment_phase(kPi / 2.0, 0.3 * kPi, &v) == HOLO_OK);
  CHECK(v == kPi);
  CHECK(holo_closed_experiment_phase(kPi / 2.0, kPi / 4.0, &v) ==
        HOLO_ERR_UNDEFINED_PHASE);

  double closed = 0.0, numeric = 0.0;
  REQUIRE(holo_schmidt_point(1.0, 0, &closed, &numeric) == HOLO_OK);
  CHECK(std::abs(closed - (-2.0 * kPi)) < 1e-12);
  CHECK(std::abs(numeric - closed) < 1e-6);
}

TEST_CASE("fringe simulation and fit through the C surface") {
  holo_coincidence_model model{};
  REQUIRE(holo_experiment_model(0.4 * kPi, 0.35 * kPi / 2.0, 11911.0, 1616.0,
                                &model) == HOLO_OK);
  CHECK(model.max_counts == 11911.0);
  CHECK(model.visibility > 0.0);

  std::vector<double> phi;
  for (int k = 0; k < 21; ++k) phi.push_back(kPi * k / 21.0);
  std::vector<double> counts(phi.size());

  SUBCASE("deterministic draws") {
    std::vector<double> again(phi.size());
    REQUIRE(holo_sample_fringe(&model, phi.data(), 21, 9001, counts.data()) == HOLO_OK);
    REQUIRE(holo_sample_fringe(&model, phi.data(), 21, 9001, again.data()) == HOLO_OK);
    CHECK(counts == again);
  }

  SUBCASE("noiseless fit recovers the model phase") {
    for (size_t k = 0; k < phi.size(); ++k)
      REQUIRE(holo_expected_counts(&model, phi[k], &counts[k]) == HOLO_OK);
    holo_fit_result fit{};
    REQUIRE(holo_fit_sinusoid(phi.data(), counts.data(), 21, &fit) == HOLO_OK);
    double delta = 0.0;
    holo_wrap_pi(fit.phase - model.holonomic_phase, &delta);
    CHECK(std::abs(delta) < 1e-9);
  }

  SUBCASE("circular mean") {
    const double phases[3] = {0.2, 0.3, 0.4};
    double mean = 0.0;
    REQUIRE(holo_circular_mean(phases, 3, &mean) == HOLO_OK);
    CHECK(std::abs(mean - 0.3) < 1e-12);
    CHECK(holo_circular_mean(phases, 0, &mean) == HOLO_ERR_NO_REFERENCE);
  }
}

TEST_CASE("visibility helpers") {
  double v = 0.0;
  REQUIRE(holo_visibility_theory(kPi / 2.0, kPi / 4.0, &v) == HOLO_OK);
  CHECK(v < 1e-12);
  REQUIRE(holo_experimental_visibility(1.0, 11911.0, 1616.0, &v) == HOLO_OK);
  CHECK(std::abs(v - 10295.0 / 13527.0) < 1e-12);
  CHECK(holo_experimental_visibility(1.0, 0.0, 0.0, &v) == HOLO_ERR_INVALID_COUNTS);
}

TEST_CASE("seed mixing is index sensitive") {
  CHECK(holo_seed_mix(1, 0) != holo_seed_mix(1, 1));
  CHECK(holo_seed_mix(1, 0) != holo_seed_mix(2, 0));
  CHECK(holo_seed_mix(42, 7) == holo_seed_mix(42, 7));
}

TEST_CASE("ball trace handles") {
  holo_ball_trace* trace = nullptr;
  REQUIRE(holo_trace_schmidt(2.0 * kPi, 512, &trace) == HOLO_OK);
  REQUIRE(trace != nullptr);
  CHECK(holo_ball_trace_crossings(trace) == 2);
  CHECK(holo_ball_trace_topological_phase(trace) == doctest::Approx(2.0 * kPi));
  const int n = holo_ball_trace_size(trace);
  CHECK(n == 513);
  holo_ball_point p{};
  REQUIRE(holo_ball_trace_point(trace, 0, &p) == HOLO_OK);
  CHECK(std::abs(p.r_x) < 1e-12);
  CHECK(holo_ball_trace_point(trace, n, &p) == HOLO_ERR_INVALID_ARGUMENT);
  holo_ball_trace_destroy(trace);

  holo_ball_trace* experiment = nullptr;
  REQUIRE(holo_trace_experiment(0.7 * kPi / 2.0, 0, &experiment) == HOLO_OK);
  CHECK(holo_ball_trace_crossings(experiment) == 1);
  holo_ball_trace_destroy(experiment);
}

TEST_CASE("projection trace handles") {
  holo_projection_trace* trace = nullptr;
  REQUIRE(holo_trace_projections(0.0, 0.4, 64, &trace) == HOLO_OK);
  const int n = holo_projection_trace_size(trace);
  CHECK(n == 3 * 65);
  holo_projection_point p{};
  REQUIRE(holo_projection_trace_point(trace, 0, &p) == HOLO_OK);
  // |HH>: both qubits start on the +sigma1 pole.
  CHECK(std::abs(p.a_x - 1.0) < 1e-12);
  CHECK(std::abs(p.b_x - 1.0) < 1e-12);
  holo_projection_trace_destroy(trace);
}

TEST_CASE("verify report handle") {
  holo_verify_report* report = nullptr;
  REQUIRE(holo_verify_run(0, &report) == HOLO_OK);
  CHECK(holo_verify_all_pass(report) == 1);
  const int n = holo_verify_size(report);
  CHECK(n >= 5);
  for (int k = 0; k < n; ++k) {
    const char* name = nullptr;
    double residual = -1.0, tolerance = -1.0;
    int32_t pass = 0;
    REQUIRE(holo_verify_item(report, k, &name, &residual, &tolerance, &pass) == HOLO_OK);
    CHECK(name != nullptr);
    CHECK(pass == 1);
    CHECK(residual <= tolerance);
  }
  holo_verify_destroy(report);

  holo_verify_report* faulted = nullptr;
  REQUIRE(holo_verify_run(1, &faulted) == HOLO_OK);
  CHECK(holo_verify_all_pass(faulted) == 0);
  holo_verify_destroy(faulted);
}
