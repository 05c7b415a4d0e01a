#include "holonomy/states.hpp"

#include <cmath>

namespace holonomy {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDegenerateGap = 1e-9;

// Phase-fix a unit vector so its first component of magnitude > 1e-12 is
// real positive. Returns the phase that was removed.
Complex phase_fix(Vec2c& v) {
  Complex lead = v[0];
  if (std::abs(lead) <= 1e-12) lead = v[1];
  if (std::abs(lead) == 0.0) return 1.0;
  const Complex ph = lead / std::abs(lead);
  v[0] /= ph;
  v[1] /= ph;
  return ph;
}

Vec2c orthogonal_complement(const Vec2c& v) {
  return {-std::conj(v[1]), std::conj(v[0])};
}

void check_normalized(const TwoQubitState& state) {
  if (std::abs(norm(state.amp) - 1.0) > kNormTol)
    raise(ErrorCode::not_normalized, "state amplitudes must have unit norm");
}

// Amplitude matrix M with M[j][k] = psi_{jk}.
Mat2 amplitude_matrix(const TwoQubitState& s) {
  Mat2 m;
  m.at(0, 0) = s.amplitude(0, 0);
  m.at(0, 1) = s.amplitude(0, 1);
  m.at(1, 0) = s.amplitude(1, 0);
  m.at(1, 1) = s.amplitude(1, 1);
  return m;
}

// Ascending eigenpairs of a Hermitian 2x2.
struct EigenPair {
  double lo = 0.0, hi = 0.0;
  Vec2c v_lo{}, v_hi{};
};

EigenPair hermitian_eigen(const Mat2& h) {
  EigenPair e;
  const double p = h.at(0, 0).real();
  const double r = h.at(1, 1).real();
  const Complex q = h.at(0, 1);
  const double mid = 0.5 * (p + r);
  const double rad = std::sqrt(0.25 * (p - r) * (p - r) + std::norm(q));
  e.lo = mid - rad;
  e.hi = mid + rad;

  if (rad <= 1e-15) {
    e.v_lo = {0.0, 1.0};
    e.v_hi = {1.0, 0.0};
    return e;
  }
  // Eigenvector for lambda: (q, lambda - p) or (lambda - r, conj(q)),
  // whichever is better conditioned.
  auto vec_for = [&](double lambda) -> Vec2c {
    Vec2c v1{q, Complex(lambda - p, 0.0)};
    Vec2c v2{Complex(lambda - r, 0.0), std::conj(q)};
    Vec2c v = (norm(v1) >= norm(v2)) ? v1 : v2;
    const double n = norm(v);
    return {v[0] / n, v[1] / n};
  };
  e.v_hi = vec_for(e.hi);
  e.v_lo = orthogonal_complement(e.v_hi);
  return e;
}

}  // namespace

TwoQubitState TwoQubitState::from_amplitudes(const Vec4c& amplitudes) {
  TwoQubitState s{amplitudes};
  check_normalized(s);
  return s;
}

TwoQubitState TwoQubitState::preparation(double alpha) {
  TwoQubitState s;
  s.amp[0] = std::cos(alpha / 2.0);
  s.amp[3] = std::sin(alpha / 2.0);
  return s;
}

TwoQubitState TwoQubitState::bell_phi_plus() {
  TwoQubitState s;
  s.amp[0] = 1.0 / std::sqrt(2.0);
  s.amp[3] = 1.0 / std::sqrt(2.0);
  return s;
}

double fidelity(const TwoQubitState& a, const TwoQubitState& b) {
  return std::norm(inner(a.amp, b.amp));
}

TwoQubitState SchmidtForm::reconstruct() const {
  const Complex c1 = std::cos(alpha / 2.0) * std::exp(Complex(0.0, -beta / 2.0));
  const Complex c2 = std::sin(alpha / 2.0) * std::exp(Complex(0.0, beta / 2.0));
  const Vec4c t1 = kron(basis_a[0], basis_b[0]);
  const Vec4c t2 = kron(basis_a[1], basis_b[1]);
  TwoQubitState s;
  for (size_t k = 0; k < 4; ++k) s.amp[k] = c1 * t1[k] + c2 * t2[k];
  return s;
}

SchmidtForm schmidt_decompose(const TwoQubitState& state) {
  check_normalized(state);
  const Mat2 m = amplitude_matrix(state);
  const Mat2 mm = m.dagger() * m;
  const EigenPair eig = hermitian_eigen(mm);

  const double c1 = std::sqrt(std::max(eig.hi, 0.0));
  const double c2 = std::sqrt(std::max(eig.lo, 0.0));

  SchmidtForm form;
  form.degenerate = (c1 - c2) < kDegenerateGap;
  form.eta = form.degenerate ? 0 : 1;
  form.alpha = 2.0 * std::atan2(c2, c1);

  // Right-basis vectors of the decomposition live on qubit b as their
  // complex conjugates: psi = sum_i c_i |u_i> (x) |conj(v_i)>.
  Vec2c v1, v2;
  if (form.degenerate) {
    // Tie-break: computational basis on the b side.
    v1 = {1.0, 0.0};
    v2 = {0.0, 1.0};
  } else {
    v1 = eig.v_hi;
    v2 = eig.v_lo;
  }

  Vec2c u1, u2;
  if (c1 > 1e-12) {
    u1 = mul(m, v1);
    const double n1 = norm(u1);
    u1 = {u1[0] / n1, u1[1] / n1};
  } else {
    u1 = {1.0, 0.0};
  }
  if (c2 > 1e-12) {
    u2 = mul(m, v2);
    // Explicit re-orthogonalization; only relevant in the near-degenerate
    // tie-break branch where v1, v2 are not exact singular vectors.
    const Complex overlap = inner(u1, u2);
    u2 = {u2[0] - overlap * u1[0], u2[1] - overlap * u1[1]};
    const double n2 = norm(u2);
    if (n2 > 1e-12) {
      u2 = {u2[0] / n2, u2[1] / n2};
    } else {
      u2 = orthogonal_complement(u1);
    }
  } else {
    u2 = orthogonal_complement(u1);
  }

  Vec2c w1 = {std::conj(v1[0]), std::conj(v1[1])};
  Vec2c w2 = {std::conj(v2[0]), std::conj(v2[1])};
  phase_fix(u1);
  phase_fix(u2);
  phase_fix(w1);
  phase_fix(w2);

  form.basis_a = {u1, u2};
  form.basis_b = {w1, w2};

  // Relative phase of the two Schmidt terms.
  const Complex t1 = inner(kron(u1, w1), state.amp);
  const Complex t2 = inner(kron(u2, w2), state.amp);
  double beta = 0.0;
  if (c1 > 1e-12 && c2 > 1e-12)
    beta = std::arg(t2) - std::arg(t1);
  beta = std::fmod(beta, kTwoPi);
  if (beta < 0.0) beta += kTwoPi;
  form.beta = beta;
  return form;
}

SchmidtForm mes_form(const std::array<Vec2c, 2>& basis_a,
                     const std::array<Vec2c, 2>& basis_b) {
  for (const auto& basis : {basis_a, basis_b}) {
    if (std::abs(norm(basis[0]) - 1.0) > 1e-12 ||
        std::abs(norm(basis[1]) - 1.0) > 1e-12 ||
        std::abs(inner(basis[0], basis[1])) > 1e-12)
      raise(ErrorCode::invalid_argument, "MES basis override must be orthonormal");
  }
  SchmidtForm form;
  form.alpha = kPi / 2.0;
  form.beta = 0.0;
  form.basis_a = basis_a;
  form.basis_b = basis_b;
  form.eta = 1;  // forced: the override resolves the MES basis/sign freedom
  form.degenerate = true;
  return form;
}

double tangle(const TwoQubitState& state) {
  check_normalized(state);
  const Complex d = state.amp[0] * state.amp[3] - state.amp[1] * state.amp[2];
  const double c = 2.0 * std::abs(d);
  return c * c;
}

Vec3 reduced_bloch(const TwoQubitState& state, Qubit which) {
  check_normalized(state);
  const Mat2 m = amplitude_matrix(state);
  Mat2 rho;
  if (which == Qubit::a) {
    rho = m * m.dagger();
  } else {
    // rho_b[k][l] = sum_j psi_{jk} conj(psi_{jl})
    rho = (m.dagger() * m).transpose();
  }
  auto expectation = [&](const Mat2& sigma) {
    return (sigma * rho).trace().real();
  };
  return {expectation(kSigma1), expectation(kSigma2), expectation(kSigma3)};
}

std::optional<Vec3> preferred_direction(const TwoQubitState& state, Qubit which) {
  const Vec3 b = reduced_bloch(state, which);
  if (b.norm() < 1e-9) return std::nullopt;
  return b.normalized();
}

}  // namespace holonomy
