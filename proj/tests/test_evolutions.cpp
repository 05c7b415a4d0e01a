#include "doctest.h"
#include "holonomy/evolutions.hpp"
#include "test_helpers.hpp"

using namespace holonomy;
using testing_support::RandomSource;
using testing_support::series_exp;

namespace {

Complex initial_overlap_at_end(const Trajectory& traj) {
  return inner(traj.initial.amp, endpoint(traj).amp);
}

}  // namespace

TEST_CASE("schmidt evolution of a product state returns to itself at 2pi") {
  const SchmidtForm form = schmidt_decompose(TwoQubitState::preparation(0.0));
  const Trajectory traj = schmidt_evolution(form, kTwoPi);
  CHECK(fidelity(endpoint(traj), traj.initial) >= 1.0 - 1e-10);
}

TEST_CASE("schmidt evolution overlap follows cos(theta) - i|cos alpha| sin(theta)") {
  SUBCASE("MES with explicit computational basis at theta = pi") {
    const std::array<Vec2c, 2> basis{Vec2c{1.0, 0.0}, Vec2c{0.0, 1.0}};
    const Trajectory traj = schmidt_evolution(mes_form(basis, basis), kPi);
    const Complex ov = initial_overlap_at_end(traj);
    CHECK(std::abs(ov - Complex(-1.0, 0.0)) < 1e-12);
  }
  SUBCASE("alpha = pi/3 at theta = pi/2 gives -0.5i") {
    const SchmidtForm form = schmidt_decompose(TwoQubitState::preparation(kPi / 3.0));
    const Trajectory traj = schmidt_evolution(form, kPi / 2.0);
    const Complex ov = initial_overlap_at_end(traj);
    CHECK(std::abs(ov - Complex(0.0, -0.5)) < 1e-12);
  }
  SUBCASE("random alpha, random theta") {
    RandomSource rnd(53);
    for (int trial = 0; trial < 50; ++trial) {
      const double alpha = rnd.real(0.05, kPi / 2.0 - 0.05);
      const double theta = rnd.real(0.0, kTwoPi);
      const SchmidtForm form = schmidt_decompose(TwoQubitState::preparation(alpha));
      const Complex ov = initial_overlap_at_end(schmidt_evolution(form, theta));
      const Complex expected(std::cos(theta), -std::abs(std::cos(alpha)) * std::sin(theta));
      CHECK(std::abs(ov - expected) < 1e-11);
    }
  }
}

TEST_CASE("schmidt evolution requires a resolved basis on the degenerate form") {
  const SchmidtForm degenerate = schmidt_decompose(TwoQubitState::bell_phi_plus());
  CHECK_THROWS_AS(schmidt_evolution(degenerate, kTwoPi), Error);
  try {
    schmidt_evolution(degenerate, kTwoPi);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_schmidt);
  }
}

TEST_CASE("experiment unitary") {
  SUBCASE("s = 0 collapses to the identity") {
    CHECK(max_norm(experiment_unitary(0.0) - Mat2::identity()) <= 1e-12);
  }
  SUBCASE("s = pi/2 matches the series-product oracle") {
    const Mat2 f_outer = series_exp(kSigma2 * Complex(0.0, kPi / 4.0));
    const Mat2 f_mid = series_exp(kSigma1 * Complex(0.0, -kPi / 2.0));
    const Mat2 oracle = f_outer * f_mid * f_outer;
    CHECK(max_norm(experiment_unitary(kPi / 2.0) - oracle) <= 1e-12);
  }
  SUBCASE("SU(2) closure over an s grid") {
    for (int k = 0; k < 50; ++k) {
      const double s = (kPi / 2.0) * k / 49.0;
      const Mat2 u = experiment_unitary(s);
      CHECK(is_unitary(u));
      CHECK(std::abs(u.det() - Complex(1.0, 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("experiment trajectory endpoint equals U (x) U applied directly") {
  SUBCASE("s = 0 is the identity evolution") {
    RandomSource rnd(59);
    const TwoQubitState psi = rnd.state();
    const Trajectory traj = experiment_trajectory(psi, 0.0);
    CHECK(fidelity(endpoint(traj), psi) >= 1.0 - 1e-10);
  }
  SUBCASE("|HH> at s = pi/8") {
    const TwoQubitState psi = TwoQubitState::preparation(0.0);
    const Trajectory traj = experiment_trajectory(psi, kPi / 8.0);
    const Mat2 u = experiment_unitary(kPi / 8.0);
    TwoQubitState direct;
    direct.amp = mul(kron(u, u), psi.amp);
    CHECK(fidelity(endpoint(traj), direct) >= 1.0 - 1e-10);
  }
  SUBCASE("MES at s = pi/4 reaches the orthogonal-phase transition") {
    const Trajectory traj = experiment_trajectory(TwoQubitState::bell_phi_plus(), kPi / 4.0);
    CHECK(std::abs(initial_overlap_at_end(traj).real()) < 1e-12);
    CHECK(std::abs(initial_overlap_at_end(traj)) < 1e-12);
  }
  SUBCASE("grid of (alpha, s): sampled endpoint equals composed endpoint") {
    for (double alpha : {0.0, 0.3 * kPi, 0.5 * kPi, 0.8 * kPi}) {
      for (double s : {0.1 * kPi / 2.0, 0.5 * kPi / 2.0, 0.9 * kPi / 2.0}) {
        const Trajectory traj =
            experiment_trajectory(TwoQubitState::preparation(alpha), s, 64);
        const SampledTrajectory sampled = sample(traj);
        CHECK(fidelity(sampled.samples.back().state, endpoint(traj)) >= 1.0 - 1e-10);
        const double t_diff = std::abs(inner(sampled.samples.back().state.amp,
                                             endpoint(traj).amp)) -
                              1.0;
        CHECK(std::abs(t_diff) < 1e-10);
      }
    }
  }
}

TEST_CASE("sampling") {
  SUBCASE("identity segment keeps every sample at the initial state") {
    Trajectory traj;
    traj.initial = TwoQubitState::bell_phi_plus();
    traj.segments = {Segment{Mat2::zero(), Mat2::zero(), 1.0}};
    traj.samples_per_segment = 16;
    const SampledTrajectory sampled = sample(traj);
    for (const TrajectorySample& s : sampled.samples)
      CHECK(fidelity(s.state, traj.initial) >= 1.0 - 1e-12);
  }
  SUBCASE("samples include both endpoints of every segment and stay normalized") {
    const Trajectory traj =
        experiment_trajectory(TwoQubitState::preparation(0.3), 0.7, 32);
    const SampledTrajectory sampled = sample(traj);
    CHECK(sampled.samples.size() ==
          traj.segments.size() * (static_cast<size_t>(sampled.samples_per_segment) + 1));
    CHECK(sampled.samples.front().t == 0.0);
    for (const TrajectorySample& s : sampled.samples)
      CHECK(std::abs(norm(s.state.amp) - 1.0) <= 1e-10);
  }
  SUBCASE("consecutive overlap arguments stay below pi/2 on a dense grid") {
    const SchmidtForm form = schmidt_decompose(TwoQubitState::preparation(0.4 * kPi));
    const SampledTrajectory sampled = sample(schmidt_evolution(form, kTwoPi, 1024));
    for (size_t k = 0; k + 1 < sampled.samples.size(); ++k) {
      const Complex ov =
          inner(sampled.samples[k].state.amp, sampled.samples[k + 1].state.amp);
      CHECK(std::abs(std::arg(ov)) < kPi / 2.0);
    }
  }
  SUBCASE("a 2-point request on a 2pi rotation is refined, and strict mode rejects it") {
    const std::array<Vec2c, 2> basis{Vec2c{1.0, 0.0}, Vec2c{0.0, 1.0}};
    const Trajectory coarse = schmidt_evolution(mes_form(basis, basis), kTwoPi, 2);
    const SampledTrajectory refined = sample(coarse);
    CHECK(refined.samples_per_segment > 2);
    CHECK_THROWS_AS(sample_exact(coarse), Error);
  }
  SUBCASE("refinement cap surfaces as non_convergent") {
    // A generator this fast needs > 2^20 points per segment.
    Trajectory traj;
    traj.initial = TwoQubitState::preparation(0.0);
    const Mat2 fast = kSigma1 * Complex(1.0e7, 0.0);
    traj.segments = {Segment{fast, fast, kTwoPi}};
    traj.samples_per_segment = 2;
    CHECK_THROWS_AS(sample(traj), Error);
    try {
      sample(traj);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::non_convergent);
    }
  }
}
