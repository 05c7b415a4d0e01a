#include "holonomy/optics.hpp"

#include <cmath>

#include "holonomy/evolutions.hpp"
#include "holonomy/phases.hpp"
#include "holonomy/rng.hpp"

namespace holonomy {

namespace {

Mat2 rotation(double theta) {
  Mat2 r;
  r.at(0, 0) = std::cos(theta);
  r.at(0, 1) = -std::sin(theta);
  r.at(1, 0) = std::sin(theta);
  r.at(1, 1) = std::cos(theta);
  return r;
}

// Phase gamma minimizing ||candidate - e^{i gamma} reference||, and the
// residual at that phase.
PlateCheck align_phase(const Mat2& candidate, const Mat2& reference) {
  const Complex t = (reference.dagger() * candidate).trace();
  PlateCheck check;
  check.global_phase = std::abs(t) > 0.0 ? std::arg(t) : 0.0;
  const Mat2 adjusted = reference * std::exp(Complex(0.0, check.global_phase));
  check.residual = max_norm(candidate - adjusted);
  return check;
}

}  // namespace

Mat2 jones_matrix(const WavePlate& plate) {
  Mat2 retarder;
  retarder.at(0, 0) = std::exp(Complex(0.0, -plate.retardance / 2.0));
  retarder.at(1, 1) = std::exp(Complex(0.0, plate.retardance / 2.0));
  return rotation(plate.angle) * retarder * rotation(-plate.angle);
}

Mat2 quarter_wave(double angle) { return jones_matrix({kPi / 2.0, angle}); }

Mat2 half_wave(double angle) { return jones_matrix({kPi, angle}); }

Mat2 experiment_plate_product(double s) {
  return quarter_wave(-kPi / 4.0) * half_wave(kPi / 4.0 - s / 2.0) *
         quarter_wave(-kPi / 4.0);
}

PlateCheck verify_plate_decomposition(double s) {
  const PlateCheck check = align_phase(experiment_plate_product(s), experiment_unitary(s));
  if (check.residual > 1e-6)
    raise(ErrorCode::decomposition_mismatch,
          "plate product does not reproduce the evolution; check conventions");
  return check;
}

ArmPair arm_unitaries(double s) {
  ArmPair arms;
  arms.u_breve = quarter_wave(-kPi / 4.0) * half_wave(kPi / 4.0 - s / 4.0) *
                 quarter_wave(-kPi / 4.0);
  arms.u_hat = quarter_wave(kPi / 4.0) * half_wave(-kPi / 4.0 - s / 4.0) *
               quarter_wave(kPi / 4.0);
  const PlateCheck check =
      align_phase(arms.u_hat.dagger() * arms.u_breve, experiment_unitary(s));
  arms.global_phase = check.global_phase;
  arms.residual = check.residual;
  if (check.residual > 1e-6)
    raise(ErrorCode::decomposition_mismatch,
          "arm product is not proportional to the evolution; check conventions");
  return arms;
}

double visibility_theory(double alpha, double s) {
  const double x = std::cos(2.0 * s);
  const double y = std::cos(alpha) * std::sin(2.0 * s);
  return std::sqrt(x * x + y * y);
}

double CoincidenceModel::reference_visibility() const {
  if (max_counts == 0.0 && background == 0.0)
    raise(ErrorCode::invalid_counts, "N and N0 cannot both be zero");
  return (max_counts - background) / (max_counts + background);
}

void CoincidenceModel::validate() const {
  if (!(background >= 0.0) || !(max_counts >= background))
    raise(ErrorCode::invalid_counts, "count levels must satisfy 0 <= N0 <= N");
  if (!(visibility >= 0.0) || !(visibility <= 1.0))
    raise(ErrorCode::invalid_argument, "visibility must lie in [0, 1]");
}

CoincidenceModel experiment_model(double alpha, double s, double n_max,
                                  double n_background) {
  CoincidenceModel model;
  model.max_counts = n_max;
  model.background = n_background;
  model.visibility = visibility_theory(alpha, s);
  // Two qubits each pick up the arm-product global phase.
  const ArmPair arms = arm_unitaries(s);
  double phase;
  try {
    phase = experiment_phase_closed(alpha, s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::undefined_phase) throw;
    // Transition point: the fringe is flat, any offset is unobservable.
    phase = 0.0;
  }
  model.holonomic_phase = wrap_pi(phase + 2.0 * arms.global_phase);
  model.validate();
  return model;
}

double expected_counts(double phi, const CoincidenceModel& model) {
  return 0.5 * (model.max_counts - model.background) *
             (1.0 + model.visibility * std::cos(2.0 * phi - model.holonomic_phase)) +
         model.background;
}

double experimental_visibility(double v_t, double n_max, double n_background) {
  if (n_max == 0.0 && n_background == 0.0)
    raise(ErrorCode::invalid_counts, "N and N0 cannot both be zero");
  if (!(n_background >= 0.0) || !(n_max >= n_background))
    raise(ErrorCode::invalid_counts, "count levels must satisfy 0 <= N0 <= N");
  return v_t * (n_max - n_background) / (n_max + n_background);
}

std::vector<std::int64_t> sample_counts(std::span<const double> phi_grid,
                                        const CoincidenceModel& model,
                                        std::uint64_t seed) {
  model.validate();
  Rng rng(seed);
  std::vector<std::int64_t> counts;
  counts.reserve(phi_grid.size());
  for (double phi : phi_grid) counts.push_back(poisson(rng, expected_counts(phi, model)));
  return counts;
}

}  // namespace holonomy
