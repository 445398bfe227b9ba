#pragma once

#include <span>
#include <vector>

#include "qflat/quaternion.hpp"
#include "qflat/schedule.hpp"

namespace qflat {

struct PropagationResult {
  UnitQuaternion final_state;
  std::vector<double> t;
  std::vector<UnitQuaternion> q;
  double max_norm_drift = 0.0;  // largest | |q| - 1 | before renormalization
};

struct PropagationOptions {
  double delta_r = 0.0;  // detuning drift coefficient on e3 (rad/time)
  double h = 0.0;        // step; <= 0 selects T / 8192
  UnitQuaternion initial;
  bool record_trajectory = true;
};

/// Classical RK4 on dq/dt = (u1 e1 + u2 e2 + delta_r e3) q, renormalizing
/// after every step. Controls between samples follow the schedule's
/// interpolation mode; Cubic needs four samples and degrades to Linear below.
/// Each sample interval is split into ceil(dt_i / h) equal substeps so steps
/// never straddle a sample. State and stages are carried in long double.
/// Throws StepTooLarge when h exceeds the smallest sample spacing and
/// InvalidArgument for schedules with fewer than two samples.
PropagationResult propagate(const PulseSchedule& schedule, const PropagationOptions& opts = {});

/// Exact propagation of a Hold schedule as a product of exponentials
/// exp((u1 e1 + u2 e2 + delta_r e3) dt_i).
UnitQuaternion propagate_exact_piecewise(const PulseSchedule& schedule, double delta_r = 0.0,
                                         const UnitQuaternion& initial = {});

/// Four-component inner product. 1 means identical SU(2) elements; -1 means q
/// and -q, which are different elements of SU(2).
double fidelity(const UnitQuaternion& p, const UnitQuaternion& q);

struct DetuningPoint {
  double delta_r = 0.0;
  double fidelity = 0.0;
};

/// Terminal fidelity against target for each detuning value. h <= 0 selects
/// T / 8192.
std::vector<DetuningPoint> detuning_sweep(const PulseSchedule& schedule, std::span<const double> delta_r_list,
                                          const UnitQuaternion& target, double h = 0.0);

/// Max over interior samples of |(q_{i+1} - q_{i-1}) / (2 ds) - (u1 e1 + u2 e2 + delta_r e3) q_i|
/// on a uniform grid of spacing ds.
double ode_residual(std::span<const UnitQuaternion> states, std::span<const double> u1, std::span<const double> u2,
                    double ds, double delta_r = 0.0);

}  // namespace qflat
