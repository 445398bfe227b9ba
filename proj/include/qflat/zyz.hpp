#pragma once

#include "qflat/quaternion.hpp"
#include "qflat/schedule.hpp"

namespace qflat {

/// qbar = exp(c e1) exp(b e2) exp(a e1): rotate about e1 by a, then e2 by b,
/// then e1 by c. These are the three pulse areas of the classical baseline.
struct EulerE1E2E1 {
  double a = 0.0;
  double b = 0.0;  // [0, pi]
  double c = 0.0;

  UnitQuaternion compose() const;
};

/// b is taken in [0, pi]. When b is within 1e-9 of 0 or pi only a + c is
/// determined and a := 0; likewise when b is within 1e-9 of pi/2 only c - a
/// is determined and a := 0.
EulerE1E2E1 euler_decompose(const UnitQuaternion& qbar);

/// Three equal-duration constant pulses on [0, T]: u1 = 3a/T, then u2 = 3b/T,
/// then u1 = 3c/T. Hold interpolation, four samples at 0, T/3, 2T/3, T.
PulseSchedule zyz_schedule(const EulerE1E2E1& angles, double T);

}  // namespace qflat
