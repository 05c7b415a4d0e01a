#include "holonomy/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace holonomy {

namespace {
constexpr Complex kI{0.0, 1.0};
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "Ok";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::invalid_axis: return "InvalidAxis";
    case ErrorCode::step_too_large: return "StepTooLarge";
    case ErrorCode::non_convergent: return "NonConvergent";
    case ErrorCode::undefined_phase: return "UndefinedPhase";
    case ErrorCode::estimator_mismatch: return "EstimatorMismatch";
    case ErrorCode::invalid_tangle: return "InvalidTangle";
    case ErrorCode::degenerate_schmidt: return "DegenerateSchmidtForm";
    case ErrorCode::not_maximally_entangled: return "NotMaximallyEntangled";
    case ErrorCode::leaves_mes_manifold: return "LeavesMESManifold";
    case ErrorCode::phase_undetermined: return "PhaseUndetermined";
    case ErrorCode::degenerate_grid: return "DegenerateGrid";
    case ErrorCode::no_reference: return "NoReference";
    case ErrorCode::invalid_counts: return "InvalidCounts";
    case ErrorCode::decomposition_mismatch: return "DecompositionMismatch";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0.0) raise(ErrorCode::invalid_argument, "cannot normalize zero vector");
  return {x / n, y / n, z / n};
}

Mat2 Mat2::identity() {
  Mat2 r;
  r.at(0, 0) = 1.0;
  r.at(1, 1) = 1.0;
  return r;
}

Mat2 Mat2::zero() { return Mat2{}; }

Mat2 Mat2::operator+(const Mat2& o) const {
  Mat2 r;
  for (size_t k = 0; k < 4; ++k) r.m[k] = m[k] + o.m[k];
  return r;
}

Mat2 Mat2::operator-(const Mat2& o) const {
  Mat2 r;
  for (size_t k = 0; k < 4; ++k) r.m[k] = m[k] - o.m[k];
  return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
  return r;
}

Mat2 Mat2::operator*(Complex s) const {
  Mat2 r;
  for (size_t k = 0; k < 4; ++k) r.m[k] = m[k] * s;
  return r;
}

Mat2 Mat2::dagger() const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Mat2 Mat2::transpose() const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at(i, j) = at(j, i);
  return r;
}

Complex Mat2::trace() const { return at(0, 0) + at(1, 1); }

Complex Mat2::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

Mat4 Mat4::identity() {
  Mat4 r;
  for (int i = 0; i < 4; ++i) r.at(i, i) = 1.0;
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
  Mat4 r;
  for (size_t k = 0; k < 16; ++k) r.m[k] = m[k] - o.m[k];
  return r;
}

Mat4 Mat4::dagger() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Vec2c mul(const Mat2& a, const Vec2c& v) {
  return {a.at(0, 0) * v[0] + a.at(0, 1) * v[1],
          a.at(1, 0) * v[0] + a.at(1, 1) * v[1]};
}

Vec4c mul(const Mat4& a, const Vec4c& v) {
  Vec4c r{};
  for (int i = 0; i < 4; ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += a.at(i, j) * v[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = acc;
  }
  return r;
}

Complex inner(const Vec2c& a, const Vec2c& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Complex inner(const Vec4c& a, const Vec4c& b) {
  Complex acc = 0.0;
  for (size_t k = 0; k < 4; ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double norm(const Vec2c& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

double norm(const Vec4c& v) {
  double acc = 0.0;
  for (const auto& c : v) acc += std::norm(c);
  return std::sqrt(acc);
}

double max_norm(const Mat2& a) {
  double r = 0.0;
  for (const auto& c : a.m) r = std::max(r, std::abs(c));
  return r;
}

double max_norm(const Mat4& a) {
  double r = 0.0;
  for (const auto& c : a.m) r = std::max(r, std::abs(c));
  return r;
}

bool is_unitary(const Mat2& a, double tol) {
  return max_norm(a.dagger() * a - Mat2::identity()) <= tol;
}

bool is_unitary(const Mat4& a, double tol) {
  return max_norm(a.dagger() * a - Mat4::identity()) <= tol;
}

bool is_hermitian(const Mat2& a, double tol) {
  return max_norm(a - a.dagger()) <= tol;
}

namespace {
Mat2 make_sigma1() {
  Mat2 s;
  s.at(0, 0) = 1.0;
  s.at(1, 1) = -1.0;
  return s;
}
Mat2 make_sigma2() {
  Mat2 s;
  s.at(0, 1) = 1.0;
  s.at(1, 0) = 1.0;
  return s;
}
Mat2 make_sigma3() {
  Mat2 s;
  s.at(0, 1) = -kI;
  s.at(1, 0) = kI;
  return s;
}
}  // namespace

const Mat2 kSigma1 = make_sigma1();
const Mat2 kSigma2 = make_sigma2();
const Mat2 kSigma3 = make_sigma3();

Mat2 pauli_combo(const Vec3& axis) {
  Mat2 r;
  r.at(0, 0) = axis.x;
  r.at(1, 1) = -axis.x;
  r.at(0, 1) = Complex(axis.y, -axis.z);
  r.at(1, 0) = Complex(axis.y, axis.z);
  return r;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
  return r;
}

Vec4c kron(const Vec2c& a, const Vec2c& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Mat2 su2_exp(const Vec3& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    raise(ErrorCode::invalid_axis, "rotation axis must be unit length");
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Mat2 r = Mat2::identity() * Complex(c, 0.0);
  return r - pauli_combo(axis) * Complex(0.0, s);
}

double hermitian_spectral_norm(const Mat2& a) {
  // Eigenvalues of [[p, q], [conj(q), r]] are (p+r)/2 +- sqrt(((p-r)/2)^2 + |q|^2).
  const double p = a.at(0, 0).real();
  const double r = a.at(1, 1).real();
  const double q = std::abs(a.at(0, 1));
  const double mid = 0.5 * (p + r);
  const double rad = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
  return std::max(std::abs(mid + rad), std::abs(mid - rad));
}

double wrap_pi(double phase) {
  double w = std::remainder(phase, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

double circular_distance(double a, double b) { return std::abs(wrap_pi(a - b)); }

std::vector<double> unwrap_phases(const std::vector<double>& series) {
  constexpr double kRangeSlack = 1e-12;
  constexpr double kTieTol = 1e-9;
  std::vector<double> out;
  out.reserve(series.size());
  if (series.empty()) return out;

  for (double v : series) {
    if (v > kPi + kRangeSlack || v <= -kPi - kRangeSlack)
      raise(ErrorCode::step_too_large,
            "input phase outside (-pi, pi]; wrap before unwrapping");
  }

  out.push_back(series[0]);
  for (size_t k = 1; k < series.size(); ++k) {
    const double step = wrap_pi(series[k] - series[k - 1]);
    if (std::abs(step) >= kPi - kTieTol)
      raise(ErrorCode::step_too_large,
            "consecutive jump too close to pi; refine the sampling");
    out.push_back(out.back() + step);
  }
  return out;
}

}  // namespace holonomy
