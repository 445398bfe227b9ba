#pragma once

#include <cstddef>
#include <vector>

#include "qflat/quaternion.hpp"

namespace qflat {

/// How controls are reconstructed between samples.
enum class Interpolation {
  Cubic,   // 4-point Lagrange through the nearest samples; planner output
  Linear,
  Hold,    // piecewise constant: u(t) = u_i on [t_i, t_{i+1})
};

/// Sampled control trace {t_i, u1_i, u2_i} plus provenance. Controls are in
/// rad/time; t is in the same time unit.
struct PulseSchedule {
  std::vector<double> t;
  std::vector<double> u1;
  std::vector<double> u2;
  Interpolation interpolation = Interpolation::Cubic;

  UnitQuaternion target;
  double T = 0.0;
  int N = 0;           // number of intervals; samples = N + 1
  int warp_order = 0;  // 0 when no time warp was applied
  double eta_bar = 0.0;
  double min_abs_z = 0.0;

  std::size_t size() const { return t.size(); }
};

}  // namespace qflat
