#pragma once

// Maximally entangled states as points of the SO(3) ball (radius pi,
// antipodal boundary points identified), trajectory traces in that space
// and border-crossing counts.
//
// Coordinates: a maximally entangled state equals (I (x) V)|Phi+> for one
// SU(2) element V up to sign, with |Phi+> = (|HH> + |VV>)/sqrt(2) and
// V = sqrt(2) M^T of the amplitude matrix M, normalized by a square root
// of its determinant. The ball point is (rotation angle) * (unit axis) of
// V, with the angle folded into [0, pi].

#include "holonomy/evolutions.hpp"

namespace holonomy {

// Tangle threshold below which a state is rejected as not maximally
// entangled. The map itself is only defined on exact MES; near misses are
// rejected rather than projected.
inline constexpr double kMesTangleTol = 1e-6;

struct BallPoint {
  Vec3 r;  // ||r|| <= pi
};

// Equality under the antipodal identification of the border sphere.
bool ball_points_equal(const BallPoint& p, const BallPoint& q, double tol = 1e-9);

struct BallSample {
  double t = 0.0;
  int segment = 0;
  BallPoint point;
  bool crossing = false;  // a border crossing completed at this sample
};

struct HomotopyRecord {
  int crossings = 0;               // l
  bool odd_parity = false;         // l mod 2
  double topological_phase = 0.0;  // l * pi, exact
  int grazes = 0;                  // border touches that do not pass through
  std::vector<BallSample> path;
};

// SU(2) representative of a maximally entangled state, sign-resolved
// against branch_hint (or toward real-positive trace without one).
// not_maximally_entangled below the tangle threshold.
Mat2 mes_to_su2(const TwoQubitState& state, const Mat2* branch_hint = nullptr);

BallPoint mes_to_ball(const TwoQubitState& state, const Mat2* branch_hint = nullptr);

// Trace a trajectory through the ball with branch continuity. A crossing
// is a sign change of cos(angle/2) along the continuous SU(2) lift;
// samples with |cos(angle/2)| < 1e-9 sit on the border itself and are
// bridged, a bridge with equal signs on both sides counting as a graze.
// leaves_mes_manifold if any sample drops below the tangle threshold.
HomotopyRecord trace_ball(const Trajectory& trajectory);
HomotopyRecord trace_ball(const Trajectory& trajectory, const SampledTrajectory& sampled);

// CSV-ready rows (t, r_x, r_y, r_z, segment_index, crossing_flag).
struct BallPathRow {
  double t = 0.0;
  double r_x = 0.0, r_y = 0.0, r_z = 0.0;
  int segment_index = 0;
  int crossing_flag = 0;
};

std::vector<BallPathRow> export_ball_path(const HomotopyRecord& record);

}  // namespace holonomy
