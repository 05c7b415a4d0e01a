#include "holonomy/verify.hpp"

#include <cmath>

#include "holonomy/optics.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/topology.hpp"

namespace holonomy {

namespace {

CheckResult check(const std::string& name, double residual, double tolerance) {
  return {name, residual, tolerance, residual <= tolerance};
}

double plate_sweep_residual(double fault) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double s = (kPi / 2.0) * k / 49.0;
    const Mat2 plates = quarter_wave(-kPi / 4.0) *
                        half_wave(kPi / 4.0 - s / 2.0 + fault) *
                        quarter_wave(-kPi / 4.0);
    const Mat2 direct = experiment_unitary(s);
    const Complex t = (direct.dagger() * plates).trace();
    const double gamma = std::abs(t) > 0.0 ? std::arg(t) : 0.0;
    worst = std::max(worst, max_norm(plates - direct * std::exp(Complex(0.0, gamma))));
  }
  return worst;
}

double arm_sweep_residual() {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double s = (kPi / 2.0) * k / 49.0;
    worst = std::max(worst, arm_unitaries(s).residual);
  }
  return worst;
}

double dynamical_sweep_residual() {
  double worst = 0.0;
  for (int ia = 0; ia <= 4; ++ia) {
    const double alpha = kPi * ia / 4.0;
    for (int is = 0; is <= 8; ++is) {
      const double s = (kPi / 2.0) * is / 8.0;
      const Trajectory traj =
          experiment_trajectory(TwoQubitState::preparation(alpha), s);
      const SampledTrajectory sampled = sample(traj);
      for (double d : segment_dynamical_phases(traj, sampled))
        worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

double su2_cover_residual() {
  const Vec3 axes[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0.6, 0.0, 0.8}};
  double worst = 0.0;
  const Mat2 minus_identity = Mat2::identity() * Complex(-1.0, 0.0);
  for (const Vec3& n : axes) {
    worst = std::max(worst, max_norm(su2_exp(n, kTwoPi) - minus_identity));
    worst = std::max(worst, max_norm(su2_exp(n, 0.0) - Mat2::identity()));
    worst = std::max(worst, std::abs(su2_exp(n, 1.234).det() - Complex(1.0, 0.0)));
  }
  return worst;
}

double closed_form_residual() {
  double worst = 0.0;
  for (int ia = 0; ia <= 4; ++ia) {
    const double alpha = kPi * ia / 4.0;
    for (int is = 0; is <= 8; ++is) {
      const double s = (kPi / 2.0) * is / 8.0;
      if (ia == 2 && is == 4) continue;  // transition point: phase undefined
      const PhaseDecomposition dec =
          holonomic_phase(experiment_trajectory(TwoQubitState::preparation(alpha), s));
      worst = std::max(worst, circular_distance(dec.holonomic_wrapped,
                                                experiment_phase_closed(alpha, s)));
    }
  }
  return worst;
}

double homotopy_residual() {
  const auto basis = std::array<Vec2c, 2>{Vec2c{1.0, 0.0}, Vec2c{0.0, 1.0}};
  const SchmidtForm mes = mes_form(basis, basis);
  int bad = 0;
  if (trace_ball(schmidt_evolution(mes, kTwoPi)).crossings != 2) ++bad;
  const TwoQubitState phi_plus = TwoQubitState::bell_phi_plus();
  if (trace_ball(experiment_trajectory(phi_plus, 0.3 * kPi / 2.0)).crossings != 0) ++bad;
  if (trace_ball(experiment_trajectory(phi_plus, 0.7 * kPi / 2.0)).crossings != 1) ++bad;
  return static_cast<double>(bad);
}

}  // namespace

std::vector<CheckResult> run_self_checks(bool inject_plate_fault) {
  const double fault = inject_plate_fault ? 1e-3 : 0.0;
  std::vector<CheckResult> results;
  results.push_back(check("plate_decomposition_sweep", plate_sweep_residual(fault), 1e-10));
  results.push_back(check("arm_decomposition_sweep", arm_sweep_residual(), 1e-10));
  results.push_back(check("dynamical_phase_sweep", dynamical_sweep_residual(), 1e-8));
  results.push_back(check("su2_double_cover", su2_cover_residual(), 1e-12));
  results.push_back(check("closed_form_agreement", closed_form_residual(), 1e-6));
  results.push_back(check("homotopy_classes", homotopy_residual(), 0.0));
  return results;
}

}  // namespace holonomy
