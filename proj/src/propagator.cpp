#include "qflat/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qflat/error.hpp"

namespace qflat {

namespace {

Quaternion generator(double u1, double u2, double delta_r) { return {0.0, u1, u2, delta_r}; }

// Extended-precision state for the stepper.
struct Ext {
  long double w = 0, x = 0, y = 0, z = 0;
  Ext operator+(const Ext& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Ext operator*(long double s) const { return {w * s, x * s, y * s, z * s}; }
};

// (0, g) * p
Ext apply(long double gx, long double gy, long double gz, const Ext& p) {
  return {-(gx * p.x + gy * p.y + gz * p.z), gx * p.w + gy * p.z - gz * p.y, gy * p.w + gz * p.x - gx * p.z,
          gz * p.w + gx * p.y - gy * p.x};
}

Quaternion to_double(const Ext& e) {
  return {static_cast<double>(e.w), static_cast<double>(e.x), static_cast<double>(e.y), static_cast<double>(e.z)};
}

void check_schedule(const PulseSchedule& s) {
  if (s.t.size() < 2 || s.u1.size() != s.t.size() || s.u2.size() != s.t.size())
    throw Error(ErrorCode::InvalidArgument, "schedule needs at least two samples with matching columns");
  for (std::size_t i = 1; i < s.t.size(); ++i)
    if (!(s.t[i] > s.t[i - 1])) throw Error(ErrorCode::InvalidArgument, "schedule times must be strictly increasing");
}

}  // namespace

PropagationResult propagate(const PulseSchedule& schedule, const PropagationOptions& opts) {
  check_schedule(schedule);
  const double span = schedule.t.back() - schedule.t.front();
  const double h = opts.h > 0.0 ? opts.h : span / 8192.0;

  double min_dt = span;
  for (std::size_t i = 1; i < schedule.size(); ++i) min_dt = std::min(min_dt, schedule.t[i] - schedule.t[i - 1]);
  if (h > min_dt * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "step " << h << " exceeds sample spacing " << min_dt;
    throw Error(ErrorCode::StepTooLarge, msg.str());
  }

  PropagationResult out;
  const Quaternion& q0 = opts.initial;
  Ext q{q0.w, q0.x, q0.y, q0.z};
  if (opts.record_trajectory) {
    out.t.push_back(schedule.t.front());
    out.q.push_back(opts.initial);
  }

  const std::size_t n = schedule.size();
  Interpolation mode = schedule.interpolation;
  if (mode == Interpolation::Cubic && n < 4) mode = Interpolation::Linear;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double t0 = schedule.t[i];
    const double dt = schedule.t[i + 1] - t0;
    // Stencil for the cubic: samples j0 .. j0 + 3 around interval i.
    const std::size_t j0 = std::min(i == 0 ? 0 : i - 1, n >= 4 ? n - 4 : 0);
    auto controls = [&](long double tau) -> std::pair<long double, long double> {
      switch (mode) {
        case Interpolation::Hold:
          return {schedule.u1[i], schedule.u2[i]};
        case Interpolation::Linear: {
          const long double f = tau / dt;
          return {schedule.u1[i] + f * (schedule.u1[i + 1] - schedule.u1[i]),
                  schedule.u2[i] + f * (schedule.u2[i + 1] - schedule.u2[i])};
        }
        case Interpolation::Cubic: {
          const long double t = t0 + tau;
          long double v1 = 0.0, v2 = 0.0;
          for (std::size_t a = j0; a < j0 + 4; ++a) {
            long double w = 1.0;
            for (std::size_t b = j0; b < j0 + 4; ++b)
              if (b != a) w *= (t - schedule.t[b]) / (static_cast<long double>(schedule.t[a]) - schedule.t[b]);
            v1 += w * schedule.u1[a];
            v2 += w * schedule.u2[a];
          }
          return {v1, v2};
        }
      }
      return {0.0, 0.0};
    };
    auto field = [&](long double tau, const Ext& p) {
      const auto [u1, u2] = controls(tau);
      return apply(u1, u2, opts.delta_r, p);
    };

    const int substeps = std::max(1, static_cast<int>(std::ceil(dt / h - 1e-9)));
    const long double step = static_cast<long double>(dt) / substeps;
    for (int k = 0; k < substeps; ++k) {
      const long double tau = k * step;
      const Ext k1 = field(tau, q);
      const Ext k2 = field(tau + step / 2, q + k1 * (step / 2));
      const Ext k3 = field(tau + step / 2, q + k2 * (step / 2));
      const Ext k4 = field(tau + step, q + k3 * step);
      q = q + (k1 + k2 * 2 + k3 * 2 + k4) * (step / 6);
      const long double n = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
      out.max_norm_drift = std::max(out.max_norm_drift, static_cast<double>(std::abs(n - 1)));
      q = q * (1 / n);
      if (opts.record_trajectory) {
        out.t.push_back(k + 1 == substeps ? schedule.t[i + 1] : static_cast<double>(t0 + (k + 1) * step));
        out.q.emplace_back(to_double(q));
      }
    }
  }
  out.final_state = UnitQuaternion(to_double(q));
  return out;
}

UnitQuaternion propagate_exact_piecewise(const PulseSchedule& schedule, double delta_r,
                                         const UnitQuaternion& initial) {
  check_schedule(schedule);
  if (schedule.interpolation != Interpolation::Hold)
    throw Error(ErrorCode::InvalidArgument, "exact propagation requires a piecewise-constant schedule");
  UnitQuaternion q = initial;
  for (std::size_t i = 0; i + 1 < schedule.size(); ++i) {
    const double dt = schedule.t[i + 1] - schedule.t[i];
    q = exp_pure(ImagQuaternion{schedule.u1[i], schedule.u2[i], delta_r} * dt) * q;
  }
  return q;
}

double fidelity(const UnitQuaternion& p, const UnitQuaternion& q) { return dot(p.value(), q.value()); }

std::vector<DetuningPoint> detuning_sweep(const PulseSchedule& schedule, std::span<const double> delta_r_list,
                                          const UnitQuaternion& target, double h) {
  std::vector<DetuningPoint> out;
  out.reserve(delta_r_list.size());
  for (double dr : delta_r_list) {
    PropagationOptions opts;
    opts.delta_r = dr;
    opts.h = h;
    opts.record_trajectory = false;
    out.push_back({dr, fidelity(propagate(schedule, opts).final_state, target)});
  }
  return out;
}

double ode_residual(std::span<const UnitQuaternion> states, std::span<const double> u1, std::span<const double> u2,
                    double ds, double delta_r) {
  if (states.size() != u1.size() || states.size() != u2.size())
    throw Error(ErrorCode::InvalidArgument, "states and controls must have equal length");
  if (!(ds > 0.0)) throw Error(ErrorCode::InvalidArgument, "grid spacing must be positive");
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < states.size(); ++i) {
    const Quaternion dq = (states[i + 1].value() - states[i - 1].value()) * (1.0 / (2.0 * ds));
    const Quaternion rhs = generator(u1[i], u2[i], delta_r) * states[i].value();
    worst = std::max(worst, (dq - rhs).norm());
  }
  return worst;
}

}  // namespace qflat
