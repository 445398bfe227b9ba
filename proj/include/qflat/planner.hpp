#pragma once

#include <array>
#include <vector>

#include "qflat/flat_output.hpp"
#include "qflat/quaternion.hpp"
#include "qflat/schedule.hpp"

namespace qflat {

/// Normalized form of a target gate:
///   q1 e1 + q2 e2 = r (sin eta e1 + cos eta e2),  r = sqrt(q1^2 + q2^2)
///   q0 + r e2 + q3 e3 = cos alpha + sin alpha (cos beta e2 + sin beta e3)
/// with lambda the starting angle of the alpha polynomial.
struct TargetDecomposition {
  double eta_bar = 0.0;     // [0, 2 pi)
  double alpha_bar = 0.0;   // (0, pi]
  double beta_bar = 0.0;    // [-pi/2, pi/2]
  double lambda_bar = 0.0;

  /// Target rebuilt from the four angles.
  Quaternion reconstruct() const;
};

/// Throws IdentityTarget when |qbar - 1| <= 1e-12.
TargetDecomposition decompose_target(const UnitQuaternion& qbar);

/// -alpha/2 on [pi/4, 3pi/4], pi/4 - alpha/2 elsewhere. Keeps
/// |sin(lambda) cos(lambda)| and |sin(lambda + alpha) cos(lambda + alpha)|
/// away from zero.
double lambda_rule(double alpha_bar);

struct BoundaryData {
  double alpha0 = 0.0, alpha1 = 0.0, dalpha0 = 0.0, dalpha1 = 0.0;
  double beta0 = 0.0, beta1 = 0.0, dbeta0 = 0.0, dbeta1 = 0.0;
};

BoundaryData boundary_data(const TargetDecomposition& dec);

/// c0 + c1 s + c2 s^2 + c3 s^3 on s in [0, 1].
struct Cubic {
  std::array<double, 4> c{};

  double value(double s) const { return c[0] + s * (c[1] + s * (c[2] + s * c[3])); }
  double d1(double s) const { return c[1] + s * (2.0 * c[2] + 3.0 * s * c[3]); }
  double d2(double s) const { return 2.0 * c[2] + 6.0 * s * c[3]; }
};

/// Unique cubic with p(0) = p0, p(1) = p1, p'(0) = d0, p'(1) = d1.
Cubic hermite_cubic(double p0, double p1, double d0, double d1);

struct CubicPair {
  Cubic alpha;
  Cubic beta;
};

CubicPair build_cubics(const TargetDecomposition& dec);

struct MonotonicityReport {
  double delta = 0.0;        // alpha_bar - alpha'(0)
  double dalpha0 = 0.0;      // alpha'(0)
  double grid_min = 0.0;     // min alpha' on the open validation grid
  double grid_argmin = 0.0;
};

/// Verifies alpha' > 0 on (0, 1). alpha' is the parabola
/// alpha'(s) = -6 delta s (s - 1) + alpha'(0), so positivity holds iff
/// delta > 0 and alpha'(0) >= 0, or delta = 0 and alpha'(0) > 0. The claim
/// is also checked on a 1024-point open grid. Throws MonotonicityViolation
/// with the witness in the message.
MonotonicityReport check_alpha_monotone(const CubicPair& cubics);

struct OmegaSample {
  BodyVelocity omega;
  double dw2 = 0.0;  // d omega2 / ds
  double dw3 = 0.0;  // d omega3 / ds
};

/// Body velocity of Y(s) = cos a + sin a (cos b e2 + sin b e3), a = alpha(s),
/// b = beta(s), and the s-derivatives of w2, w3:
///   w1 = b' sin^2 a
///   w2 - i w3 = exp(-i b) (a' - i b' sin a cos a)
OmegaSample omegas(const CubicPair& cubics, double s);

/// The lift Y(s) above with analytic Y' and Y'' on the given grid.
LiftSamplePath lift_path(const CubicPair& cubics, const std::vector<double>& grid);

struct ControlPair {
  double u1 = 0.0;
  double u2 = 0.0;
};

/// Closed-form virtual-time controls for the unrotated target (branch n = 0).
ControlPair s_controls(const CubicPair& cubics, double s);

/// Virtual-time plan: closed-form controls plus validation traces on a
/// 2048-point grid of [0, 1].
struct SSchedule {
  CubicPair cubics;
  std::vector<double> grid;
  std::vector<double> omega1, omega2, omega3;
  std::vector<double> theta;
  double min_abs_z = 0.0;
  double theta_end = 0.0;

  ControlPair at(double s) const { return s_controls(cubics, s); }
};

/// Builds the validation traces. Throws MonotonicityViolation,
/// SingularFlatCurve, or WindingNonzero (|theta(1)| > 1e-6).
SSchedule controls_s(const CubicPair& cubics);

struct WarpSample {
  double s = 0.0;
  double ds_dt = 0.0;
};

/// Polynomial smoothstep of order k (degree 2k + 1) mapping [0, T] onto [0, 1]
/// with derivatives 1..k vanishing at both ends. k = 1 is 3u^2 - 2u^3.
WarpSample smoothstep(double t, double T, int k);

struct SynthesisOptions {
  double T = 1.0;
  int N = 2048;
  int k = 1;
};

/// Full plan from q(0) = 1 to q(T) = qbar: s-scale controls rotated by eta_bar
/// and scaled by the warp derivative, sampled at t_i = i T / N, i = 0..N.
PulseSchedule synthesize(const UnitQuaternion& qbar, const SynthesisOptions& opts = {});

/// Same plan in virtual time without a warp: s in [0, 1], N intervals.
/// Its endpoint controls are not zero.
PulseSchedule synthesize_virtual(const UnitQuaternion& qbar, int N);

/// Rotation of the control plane by eta:
///   u1 -> cos(eta) u1 - sin(eta) u2,  u2 -> sin(eta) u1 + cos(eta) u2.
PulseSchedule rotate_controls(PulseSchedule schedule, double eta);

/// Matching rotation of the (q1, q2) state components. A schedule steering
/// 1 -> q steers 1 -> rotate_target(q, eta) after rotate_controls(., eta).
UnitQuaternion rotate_target(const UnitQuaternion& q, double eta);

}  // namespace qflat
