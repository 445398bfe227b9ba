#include "qflat/zyz.hpp"

#include <numbers>

#include "qflat/error.hpp"

namespace qflat {

namespace {
constexpr double kDegenerate = 1e-9;
}

UnitQuaternion EulerE1E2E1::compose() const {
  return exp_pure({c, 0.0, 0.0}) * exp_pure({0.0, b, 0.0}) * exp_pure({a, 0.0, 0.0});
}

EulerE1E2E1 euler_decompose(const UnitQuaternion& qbar) {
  // exp(c e1) exp(b e2) exp(a e1) =
  //   cos b (cos(a+c) + sin(a+c) e1) + sin b (cos(c-a) e2 + sin(c-a) e3)
  const double w = qbar.w(), x = qbar.x(), y = qbar.y(), z = qbar.z();
  const double sin_b = std::hypot(y, z);
  const double cos_b = std::copysign(std::hypot(w, x), w);

  EulerE1E2E1 out;
  out.b = std::atan2(sin_b, cos_b);
  const bool gimbal = out.b <= kDegenerate || std::numbers::pi - out.b <= kDegenerate;
  const bool quarter = std::abs(out.b - std::numbers::pi / 2.0) <= kDegenerate;

  const double sum = std::atan2(x * std::copysign(1.0, cos_b), w * std::copysign(1.0, cos_b));
  const double diff = std::atan2(z, y);
  if (gimbal) {
    out.a = 0.0;
    out.c = sum;
  } else if (quarter) {
    out.a = 0.0;
    out.c = diff;
  } else {
    out.a = 0.5 * (sum - diff);
    out.c = 0.5 * (sum + diff);
  }
  return out;
}

PulseSchedule zyz_schedule(const EulerE1E2E1& angles, double T) {
  if (!(T > 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  const double amp = 3.0 / T;

  PulseSchedule out;
  out.interpolation = Interpolation::Hold;
  out.target = angles.compose();
  out.T = T;
  out.N = 3;
  out.t = {0.0, T / 3.0, 2.0 * T / 3.0, T};
  out.u1 = {amp * angles.a, 0.0, amp * angles.c, amp * angles.c};
  out.u2 = {0.0, amp * angles.b, 0.0, 0.0};
  return out;
}

}  // namespace qflat
