#pragma once

// Fixed-size complex linear algebra for the two-qubit simulator: 2x2 and
// 4x4 dense matrices, tensor products, closed-form SU(2) exponentials and
// phase-unwrapping utilities.
//
// Pauli labeling follows the polarization convention used throughout this
// project: sigma1 = |H><H| - |V><V| (diagonal), sigma2 = |H><V| + |V><H|,
// sigma3 = -i|H><V| + i|V><H|, so that sigma1*sigma2 = i*sigma3 and the
// triple (sigma1, sigma2, sigma3) is right-handed. A 3-vector "axis" always
// couples to (sigma1, sigma2, sigma3) in that order.

#include <array>
#include <complex>
#include <vector>

#include "holonomy/errors.hpp"

namespace holonomy {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Default absolute tolerance for matrix identities (max-norm).
inline constexpr double kMatTol = 1e-12;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const;
  Vec3 normalized() const;  // throws invalid_argument on zero vector
};

using Vec2c = std::array<Complex, 2>;
using Vec4c = std::array<Complex, 4>;

struct Mat2 {
  // Row-major entries.
  std::array<Complex, 4> m{};

  static Mat2 identity();
  static Mat2 zero();

  Complex& at(int i, int j) { return m[static_cast<size_t>(2 * i + j)]; }
  const Complex& at(int i, int j) const { return m[static_cast<size_t>(2 * i + j)]; }

  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator*(Complex s) const;

  Mat2 dagger() const;
  Mat2 transpose() const;
  Complex trace() const;
  Complex det() const;
};

struct Mat4 {
  std::array<Complex, 16> m{};

  static Mat4 identity();

  Complex& at(int i, int j) { return m[static_cast<size_t>(4 * i + j)]; }
  const Complex& at(int i, int j) const { return m[static_cast<size_t>(4 * i + j)]; }

  Mat4 operator*(const Mat4& o) const;
  Mat4 operator-(const Mat4& o) const;
  Mat4 dagger() const;
};

Vec2c mul(const Mat2& a, const Vec2c& v);
Vec4c mul(const Mat4& a, const Vec4c& v);

// <a|b> with conjugation on the left argument.
Complex inner(const Vec2c& a, const Vec2c& b);
Complex inner(const Vec4c& a, const Vec4c& b);
double norm(const Vec2c& v);
double norm(const Vec4c& v);

double max_norm(const Mat2& a);
double max_norm(const Mat4& a);

bool is_unitary(const Mat2& a, double tol = kMatTol);
bool is_unitary(const Mat4& a, double tol = kMatTol);
bool is_hermitian(const Mat2& a, double tol = kMatTol);

// Pauli matrices in the project labeling (sigma1 diagonal).
extern const Mat2 kSigma1;
extern const Mat2 kSigma2;
extern const Mat2 kSigma3;

// axis.x*sigma1 + axis.y*sigma2 + axis.z*sigma3
Mat2 pauli_combo(const Vec3& axis);

// Tensor products; kron(A,B)*(x (x) y) = (A x) (x) (B y).
Mat4 kron(const Mat2& a, const Mat2& b);
Vec4c kron(const Vec2c& a, const Vec2c& b);

// cos(angle/2) I - i sin(angle/2) (axis . sigma). The axis must be unit
// length to 1e-12 or invalid_axis is raised.
Mat2 su2_exp(const Vec3& axis, double angle);

// Largest eigenvalue magnitude of a Hermitian 2x2 (spectral norm).
double hermitian_spectral_norm(const Mat2& a);

// Wrap into (-pi, pi].
double wrap_pi(double phase);

// Distance on the circle, |wrap(a - b)|.
double circular_distance(double a, double b);

// Continuity lift of a wrapped phase series. Inputs must already lie in
// (-pi, pi] (they are atan2-style wrapped values); a consecutive wrapped
// difference whose magnitude reaches pi within 1e-9 has no well-defined
// direction and raises step_too_large. output[0] == input[0] and
// output[k] == input[k] (mod 2pi).
std::vector<double> unwrap_phases(const std::vector<double>& series);

}  // namespace holonomy
