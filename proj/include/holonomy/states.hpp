#pragma once

// Two-qubit pure states in the H/V polarization basis, Schmidt
// decomposition, tangle and reduced Bloch projections.

#include <optional>

#include "holonomy/linalg.hpp"

namespace holonomy {

enum class Qubit { a, b };

// Amplitude order is (HH, HV, VH, VV): index = 2*j + k with H = 0, V = 1,
// j the qubit-a letter and k the qubit-b letter.
struct TwoQubitState {
  Vec4c amp{};

  // Validates normalization to 1e-12 (not_normalized otherwise).
  static TwoQubitState from_amplitudes(const Vec4c& amplitudes);

  // cos(alpha/2)|HH> + sin(alpha/2)|VV>, the tunable-entanglement input
  // state; alpha in [0, pi].
  static TwoQubitState preparation(double alpha);

  // (|HH> + |VV>)/sqrt(2)
  static TwoQubitState bell_phi_plus();

  Complex amplitude(int j, int k) const { return amp[static_cast<size_t>(2 * j + k)]; }
};

double fidelity(const TwoQubitState& a, const TwoQubitState& b);

// The state written as
//   cos(alpha/2) e^{-i beta/2} |n_a m_b> + sin(alpha/2) e^{+i beta/2} |n_a' m_b'>
// up to one global phase. alpha is canonicalized to [0, pi/2] (dominant
// term first); eta = sign(cos alpha) is 0 when the two Schmidt
// coefficients agree to 1e-9 and the form is flagged degenerate.
struct SchmidtForm {
  double alpha = 0.0;                 // [0, pi/2]
  double beta = 0.0;                  // [0, 2pi)
  std::array<Vec2c, 2> basis_a{};     // {|n_a>, |n_a perp>}
  std::array<Vec2c, 2> basis_b{};     // {|m_b>, |m_b perp>}
  int eta = 1;                        // {+1, -1, 0}
  bool degenerate = false;

  TwoQubitState reconstruct() const;
};

SchmidtForm schmidt_decompose(const TwoQubitState& state);

// Explicit maximally-entangled form with a caller-chosen Schmidt basis and
// eta forced to +1, for evolutions where the basis freedom must be pinned.
SchmidtForm mes_form(const std::array<Vec2c, 2>& basis_a,
                     const std::array<Vec2c, 2>& basis_b);

// Concurrence squared, (2|psi_HH psi_VV - psi_HV psi_VH|)^2.
double tangle(const TwoQubitState& state);

// Bloch vector (<sigma1>, <sigma2>, <sigma3>) of the reduced density matrix.
Vec3 reduced_bloch(const TwoQubitState& state, Qubit which);

// Unit vector along reduced_bloch, or nullopt when its norm < 1e-9
// (maximally entangled: no preferred direction).
std::optional<Vec3> preferred_direction(const TwoQubitState& state, Qubit which);

}  // namespace holonomy
