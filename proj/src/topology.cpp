#include "holonomy/topology.hpp"

#include <cmath>

namespace holonomy {

namespace {

constexpr double kBorderFloor = 1e-9;   // |cos(angle/2)| below this sits on the border
constexpr double kStepLimit = kPi / 2;  // max SU(2) rotation-angle step between samples

Mat2 amplitude_matrix(const TwoQubitState& s) {
  Mat2 m;
  m.at(0, 0) = s.amplitude(0, 0);
  m.at(0, 1) = s.amplitude(0, 1);
  m.at(1, 0) = s.amplitude(1, 0);
  m.at(1, 1) = s.amplitude(1, 1);
  return m;
}

// Raw (sign-unresolved) SU(2) representative.
Mat2 mes_su2_raw(const TwoQubitState& state) {
  if (tangle(state) < 1.0 - kMesTangleTol)
    raise(ErrorCode::not_maximally_entangled,
          "state is not maximally entangled within the tangle threshold");
  Mat2 v = amplitude_matrix(state).transpose() * std::sqrt(2.0);
  const Complex d = v.det();
  // Principal square root: deterministic branch before any hint is applied.
  const Complex root = std::sqrt(d);
  return v * (1.0 / root);
}

Mat2 resolve_branch(Mat2 v, const Mat2* hint) {
  double alignment;
  if (hint) {
    alignment = (hint->dagger() * v).trace().real();
  } else {
    alignment = v.trace().real();
  }
  if (alignment < 0.0) v = v * Complex(-1.0, 0.0);
  return v;
}

struct AxisAngle {
  double half_cos = 0.0;  // cos(angle/2) = Re tr(V)/2
  Vec3 axis_sin{};        // sin(angle/2) * unit axis
};

AxisAngle decompose(const Mat2& v) {
  // V = cos(x/2) I - i sin(x/2) (n . sigma)
  AxisAngle aa;
  aa.half_cos = 0.5 * (v.at(0, 0) + v.at(1, 1)).real();
  aa.axis_sin.x = 0.5 * (v.at(1, 1) - v.at(0, 0)).imag();
  aa.axis_sin.y = -0.5 * (v.at(0, 1) + v.at(1, 0)).imag();
  aa.axis_sin.z = 0.5 * (v.at(1, 0) - v.at(0, 1)).real();
  return aa;
}

BallPoint ball_point_from(const AxisAngle& aa) {
  const double sin_mag = aa.axis_sin.norm();
  BallPoint p;
  if (sin_mag < 1e-15) return p;  // identity rotation: center of the ball
  double angle = 2.0 * std::atan2(sin_mag, aa.half_cos);  // [0, 2pi]
  Vec3 axis = {aa.axis_sin.x / sin_mag, aa.axis_sin.y / sin_mag, aa.axis_sin.z / sin_mag};
  if (angle > kPi) {
    // Fold the [pi, 2pi] range onto the identified representative.
    angle = kTwoPi - angle;
    axis = {-axis.x, -axis.y, -axis.z};
  }
  p.r = {angle * axis.x, angle * axis.y, angle * axis.z};
  return p;
}

}  // namespace

bool ball_points_equal(const BallPoint& p, const BallPoint& q, double tol) {
  auto close = [tol](const Vec3& a, const Vec3& b) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol &&
           std::abs(a.z - b.z) <= tol;
  };
  if (close(p.r, q.r)) return true;
  // Border points are identified with their antipodes.
  if (std::abs(p.r.norm() - kPi) <= tol && std::abs(q.r.norm() - kPi) <= tol)
    return close(p.r, {-q.r.x, -q.r.y, -q.r.z});
  return false;
}

Mat2 mes_to_su2(const TwoQubitState& state, const Mat2* branch_hint) {
  return resolve_branch(mes_su2_raw(state), branch_hint);
}

BallPoint mes_to_ball(const TwoQubitState& state, const Mat2* branch_hint) {
  return ball_point_from(decompose(mes_to_su2(state, branch_hint)));
}

HomotopyRecord trace_ball(const Trajectory& trajectory) {
  return trace_ball(trajectory, sample(trajectory));
}

HomotopyRecord trace_ball(const Trajectory& trajectory, const SampledTrajectory& sampled) {
  (void)trajectory;
  HomotopyRecord record;
  record.path.reserve(sampled.samples.size());

  Mat2 prev_v;
  bool have_prev = false;
  // Sign tracking across the border: sign of cos(angle/2) on the lift.
  int last_sign = 0;
  bool pending_border = false;  // saw border samples since the last signed one

  for (const TrajectorySample& ts : sampled.samples) {
    Mat2 v;
    try {
      v = mes_to_su2(ts.state, have_prev ? &prev_v : nullptr);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::not_maximally_entangled)
        raise(ErrorCode::leaves_mes_manifold,
              "trajectory leaves the maximally entangled manifold");
      throw;
    }
    if (have_prev) {
      const double align = 0.5 * (prev_v.dagger() * v).trace().real();
      if (align < std::cos(kStepLimit / 2.0))
        raise(ErrorCode::step_too_large,
              "branch continuity lost: rotation step reached pi/2");
    }
    prev_v = v;
    have_prev = true;

    const AxisAngle aa = decompose(v);
    BallSample bs;
    bs.t = ts.t;
    bs.segment = ts.segment;
    bs.point = ball_point_from(aa);

    if (std::abs(aa.half_cos) < kBorderFloor) {
      pending_border = true;
    } else {
      const int sign = aa.half_cos > 0.0 ? 1 : -1;
      if (last_sign != 0 && sign != last_sign) {
        ++record.crossings;
        bs.crossing = true;
      } else if (last_sign != 0 && pending_border) {
        ++record.grazes;
      }
      last_sign = sign;
      pending_border = false;
    }
    record.path.push_back(bs);
  }

  record.odd_parity = (record.crossings % 2) != 0;
  record.topological_phase = static_cast<double>(record.crossings) * kPi;
  return record;
}

std::vector<BallPathRow> export_ball_path(const HomotopyRecord& record) {
  std::vector<BallPathRow> rows;
  rows.reserve(record.path.size());
  for (const BallSample& s : record.path)
    rows.push_back({s.t, s.point.r.x, s.point.r.y, s.point.r.z, s.segment,
                    s.crossing ? 1 : 0});
  return rows;
}

}  // namespace holonomy
