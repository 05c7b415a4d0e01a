#include "holonomy/fitting.hpp"

#include <array>
#include <cmath>

#include "holonomy/linalg.hpp"

namespace holonomy {

namespace {

constexpr double kFlatFringeRatio = 1e-6;

// Solve the 3x3 symmetric positive-definite system via Cholesky; returns
// false when a pivot collapses (degenerate phi grid).
bool solve_spd3(const std::array<double, 9>& a, const std::array<double, 3>& b,
                std::array<double, 3>& x, std::array<double, 9>* inverse = nullptr) {
  std::array<double, 9> l{};
  const double scale = std::abs(a[0]) + std::abs(a[4]) + std::abs(a[8]);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = a[static_cast<size_t>(3 * i + j)];
      for (int k = 0; k < j; ++k)
        sum -= l[static_cast<size_t>(3 * i + k)] * l[static_cast<size_t>(3 * j + k)];
      if (i == j) {
        if (sum <= scale * 1e-14) return false;
        l[static_cast<size_t>(3 * i + j)] = std::sqrt(sum);
      } else {
        l[static_cast<size_t>(3 * i + j)] = sum / l[static_cast<size_t>(3 * j + j)];
      }
    }
  }
  auto solve_one = [&](const std::array<double, 3>& rhs) {
    std::array<double, 3> y{};
    for (int i = 0; i < 3; ++i) {
      double sum = rhs[static_cast<size_t>(i)];
      for (int k = 0; k < i; ++k) sum -= l[static_cast<size_t>(3 * i + k)] * y[static_cast<size_t>(k)];
      y[static_cast<size_t>(i)] = sum / l[static_cast<size_t>(3 * i + i)];
    }
    std::array<double, 3> z{};
    for (int i = 2; i >= 0; --i) {
      double sum = y[static_cast<size_t>(i)];
      for (int k = i + 1; k < 3; ++k) sum -= l[static_cast<size_t>(3 * k + i)] * z[static_cast<size_t>(k)];
      z[static_cast<size_t>(i)] = sum / l[static_cast<size_t>(3 * i + i)];
    }
    return z;
  };
  x = solve_one(b);
  if (inverse) {
    for (int col = 0; col < 3; ++col) {
      std::array<double, 3> e{};
      e[static_cast<size_t>(col)] = 1.0;
      const auto column = solve_one(e);
      for (int row = 0; row < 3; ++row)
        (*inverse)[static_cast<size_t>(3 * row + col)] = column[static_cast<size_t>(row)];
    }
  }
  return true;
}

struct WlsPass {
  std::array<double, 3> coeff{};
  std::array<double, 9> covariance{};
};

WlsPass weighted_fit(const FringeData& data, const std::vector<double>& weights) {
  std::array<double, 9> gram{};
  std::array<double, 3> rhs{};
  for (size_t k = 0; k < data.points.size(); ++k) {
    const double w = weights[k];
    const std::array<double, 3> row{1.0, std::cos(2.0 * data.points[k].phi),
                                    std::sin(2.0 * data.points[k].phi)};
    for (int i = 0; i < 3; ++i) {
      rhs[static_cast<size_t>(i)] += w * row[static_cast<size_t>(i)] * data.points[k].counts;
      for (int j = 0; j < 3; ++j)
        gram[static_cast<size_t>(3 * i + j)] +=
            w * row[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
    }
  }
  WlsPass pass;
  if (!solve_spd3(gram, rhs, pass.coeff, &pass.covariance))
    raise(ErrorCode::degenerate_grid,
          "phi grid does not determine the sinusoid (values coincide mod pi)");
  return pass;
}

}  // namespace

FitResult fit_sinusoid(const FringeData& data) {
  const size_t n = data.points.size();
  if (n < 5)
    raise(ErrorCode::degenerate_grid, "at least 5 fringe points are required");

  std::vector<double> weights(n, 1.0);
  WlsPass pass = weighted_fit(data, weights);

  // One reweighting pass with Poisson variances taken from the first-pass
  // model (variance = expected counts, floored at 1).
  for (size_t k = 0; k < n; ++k) {
    const double model = pass.coeff[0] + pass.coeff[1] * std::cos(2.0 * data.points[k].phi) +
                         pass.coeff[2] * std::sin(2.0 * data.points[k].phi);
    weights[k] = 1.0 / std::max(model, 1.0);
  }
  pass = weighted_fit(data, weights);

  const double a = pass.coeff[0];
  const double b = pass.coeff[1];
  const double c = pass.coeff[2];
  const double amplitude = std::hypot(b, c);

  FitResult result;
  result.baseline = a;
  result.amplitude = amplitude;
  result.visibility = a != 0.0 ? amplitude / a : 0.0;

  if (!(a > 0.0) || amplitude / a < kFlatFringeRatio)
    raise(ErrorCode::phase_undetermined, "fringe is flat; phase offset is undetermined");

  result.phase = wrap_pi(std::atan2(c, b));

  double ss = 0.0;
  for (const FringePoint& p : data.points) {
    const double model = a + b * std::cos(2.0 * p.phi) + c * std::sin(2.0 * p.phi);
    ss += (p.counts - model) * (p.counts - model);
  }
  result.residual_rms = std::sqrt(ss / static_cast<double>(n));

  // Delta method on phase = atan2(c, b); covariance is the weighted-normal
  // inverse, which is the estimator covariance when weights are 1/variance.
  const double r2 = amplitude * amplitude;
  const double gb = -c / r2;
  const double gc = b / r2;
  const double var = gb * gb * pass.covariance[4] + 2.0 * gb * gc * pass.covariance[5] +
                     gc * gc * pass.covariance[8];
  result.phase_stderr = std::sqrt(std::max(var, 0.0));
  return result;
}

double circular_mean(std::span<const double> phases) {
  if (phases.empty())
    raise(ErrorCode::no_reference, "cannot average an empty phase list");
  double sx = 0.0, sy = 0.0;
  for (double p : phases) {
    sx += std::cos(p);
    sy += std::sin(p);
  }
  if (std::hypot(sx, sy) < 1e-12 * static_cast<double>(phases.size()))
    raise(ErrorCode::undefined_phase, "phases cancel; circular mean is undefined");
  return wrap_pi(std::atan2(sy, sx));
}

double calibrate_reference(const std::vector<FitRecord>& runs) {
  if (runs.empty()) raise(ErrorCode::no_reference, "no s = 0 runs supplied");
  std::vector<double> phases;
  phases.reserve(runs.size());
  for (const FitRecord& run : runs) {
    if (std::abs(run.s) > 1e-12)
      raise(ErrorCode::invalid_argument, "reference runs must have s = 0");
    phases.push_back(run.fit.phase);
  }
  return circular_mean(phases);
}

double extract_holonomic(const FitResult& fit, double reference) {
  return wrap_pi(fit.phase - reference);
}

}  // namespace holonomy
