#include "qflat/planner.hpp"

#include <algorithm>
#include <complex>
#include <numbers>
#include <sstream>

#include "qflat/error.hpp"

namespace qflat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kValidationGrid = 2048;
constexpr int kMonotoneGrid = 1024;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Quaternion TargetDecomposition::reconstruct() const {
  const double sa = std::sin(alpha_bar);
  const double r = sa * std::cos(beta_bar);
  return {std::cos(alpha_bar), r * std::sin(eta_bar), r * std::cos(eta_bar), sa * std::sin(beta_bar)};
}

double lambda_rule(double alpha_bar) {
  if (alpha_bar >= kPi / 4.0 && alpha_bar <= 3.0 * kPi / 4.0) return -alpha_bar / 2.0;
  return kPi / 4.0 - alpha_bar / 2.0;
}

TargetDecomposition decompose_target(const UnitQuaternion& qbar) {
  if ((qbar.value() - Quaternion::one()).norm() <= 1e-12)
    throw Error(ErrorCode::IdentityTarget, "target coincides with the identity");

  const double q0 = qbar.w(), q1 = qbar.x(), q2 = qbar.y(), q3 = qbar.z();
  const double r2 = q1 * q1 + q2 * q2;
  const double r = std::sqrt(r2);

  TargetDecomposition dec;
  if (r2 >= 1e-24) {
    dec.eta_bar = std::atan2(q1, q2);
    if (dec.eta_bar < 0.0) dec.eta_bar += 2.0 * kPi;
    if (dec.eta_bar >= 2.0 * kPi) dec.eta_bar = 0.0;
  }
  dec.alpha_bar = std::acos(std::clamp(q0, -1.0, 1.0));
  // At alpha = pi the e2/e3 direction is unconstrained; beta = 0 gives a
  // constant-beta plan.
  dec.beta_bar = (r2 + q3 * q3 < 1e-24) ? 0.0 : std::atan2(q3, r);
  dec.lambda_bar = lambda_rule(dec.alpha_bar);
  return dec;
}

BoundaryData boundary_data(const TargetDecomposition& dec) {
  const double a = dec.alpha_bar;
  const double b = dec.beta_bar;
  const double l0 = dec.lambda_bar;
  const double l1 = dec.lambda_bar + dec.alpha_bar;

  BoundaryData bd;
  bd.alpha0 = l0;
  bd.alpha1 = l1;
  bd.dalpha0 = bd.dalpha1 = a * std::cos(b);
  bd.beta0 = bd.beta1 = b;
  bd.dbeta0 = -a * std::sin(b) / (std::sin(l0) * std::cos(l0));
  bd.dbeta1 = -a * std::sin(b) / (std::sin(l1) * std::cos(l1));
  return bd;
}

Cubic hermite_cubic(double p0, double p1, double d0, double d1) {
  return Cubic{{p0, d0, 3.0 * (p1 - p0) - 2.0 * d0 - d1, 2.0 * (p0 - p1) + d0 + d1}};
}

CubicPair build_cubics(const TargetDecomposition& dec) {
  const BoundaryData bd = boundary_data(dec);
  return {hermite_cubic(bd.alpha0, bd.alpha1, bd.dalpha0, bd.dalpha1),
          hermite_cubic(bd.beta0, bd.beta1, bd.dbeta0, bd.dbeta1)};
}

MonotonicityReport check_alpha_monotone(const CubicPair& cubics) {
  const Cubic& alpha = cubics.alpha;
  MonotonicityReport rep;
  rep.dalpha0 = alpha.d1(0.0);
  rep.delta = (alpha.value(1.0) - alpha.value(0.0)) - rep.dalpha0;

  rep.grid_min = alpha.d1(1.0 / (kMonotoneGrid + 1));
  rep.grid_argmin = 1.0 / (kMonotoneGrid + 1);
  for (int i = 1; i <= kMonotoneGrid; ++i) {
    const double s = static_cast<double>(i) / (kMonotoneGrid + 1);
    const double d = alpha.d1(s);
    if (d < rep.grid_min) {
      rep.grid_min = d;
      rep.grid_argmin = s;
    }
  }

  // delta is zero in exact arithmetic when beta_bar = 0; round-off in the
  // coefficient arithmetic is snapped to it.
  const double scale = 1.0 + std::abs(alpha.value(1.0)) + std::abs(alpha.value(0.0));
  if (std::abs(rep.delta) <= 1e-13 * scale) rep.delta = 0.0;
  const bool analytic = (rep.delta > 0.0 && rep.dalpha0 >= 0.0) || (rep.delta == 0.0 && rep.dalpha0 > 0.0);
  // The parabola form requires alpha'(0) = alpha'(1).
  const bool symmetric = std::abs(alpha.d1(1.0) - rep.dalpha0) <= 1e-12 * (1.0 + std::abs(rep.dalpha0));
  if (!analytic || !symmetric || !(rep.grid_min > 0.0)) {
    std::ostringstream msg;
    msg << "alpha' not positive on (0,1): delta = " << rep.delta << ", alpha'(0) = " << rep.dalpha0
        << ", alpha'(1) = " << alpha.d1(1.0) << ", grid min " << rep.grid_min << " at s = " << rep.grid_argmin;
    throw Error(ErrorCode::MonotonicityViolation, msg.str());
  }
  return rep;
}

OmegaSample omegas(const CubicPair& cubics, double s) {
  using C = std::complex<double>;
  const double a = cubics.alpha.value(s), da = cubics.alpha.d1(s), dda = cubics.alpha.d2(s);
  const double b = cubics.beta.value(s), db = cubics.beta.d1(s), ddb = cubics.beta.d2(s);

  const double sa = std::sin(a);
  const double sc = sa * std::cos(a);
  const double dsc = std::cos(2.0 * a) * da;

  const C w(da, -db * sc);
  const C dw(dda, -(ddb * sc + db * dsc));
  const C rot = std::polar(1.0, -b);
  const C z = rot * w;
  const C dz = rot * (C(0.0, -db) * w + dw);

  OmegaSample out;
  out.omega = {db * sa * sa, z.real(), -z.imag()};
  out.dw2 = dz.real();
  out.dw3 = -dz.imag();
  return out;
}

LiftSamplePath lift_path(const CubicPair& cubics, const std::vector<double>& grid) {
  LiftSamplePath path;
  path.s = grid;
  path.Y.reserve(grid.size());
  path.dY.reserve(grid.size());
  path.ddY.reserve(grid.size());
  for (double s : grid) {
    const double a = cubics.alpha.value(s), da = cubics.alpha.d1(s), dda = cubics.alpha.d2(s);
    const double b = cubics.beta.value(s), db = cubics.beta.d1(s), ddb = cubics.beta.d2(s);
    const double sa = std::sin(a), ca = std::cos(a), sb = std::sin(b), cb = std::cos(b);
    const double speed2 = da * da + db * db;

    path.Y.emplace_back(ca, 0.0, sa * cb, sa * sb);
    path.dY.emplace_back(-sa * da, 0.0, ca * da * cb - sa * sb * db, ca * da * sb + sa * cb * db);
    path.ddY.emplace_back(-ca * da * da - sa * dda, 0.0,
                          -sa * cb * speed2 + ca * cb * dda - 2.0 * ca * sb * da * db - sa * sb * ddb,
                          -sa * sb * speed2 + ca * sb * dda + 2.0 * ca * cb * da * db + sa * cb * ddb);
  }
  return path;
}

ControlPair s_controls(const CubicPair& cubics, double s) {
  const OmegaSample o = omegas(cubics, s);
  const double w2 = o.omega.w2, w3 = o.omega.w3;
  const double r2 = w2 * w2 + w3 * w3;
  return {o.omega.w1 + (w3 * o.dw2 - w2 * o.dw3) / (2.0 * r2), std::sqrt(r2)};
}

SSchedule controls_s(const CubicPair& cubics) {
  check_alpha_monotone(cubics);

  SSchedule out;
  out.cubics = cubics;
  out.grid.resize(kValidationGrid);
  out.omega1.resize(kValidationGrid);
  out.omega2.resize(kValidationGrid);
  out.omega3.resize(kValidationGrid);
  std::vector<std::complex<double>> z(kValidationGrid);
  for (int i = 0; i < kValidationGrid; ++i) {
    const double s = static_cast<double>(i) / (kValidationGrid - 1);
    const OmegaSample o = omegas(cubics, s);
    out.grid[i] = s;
    out.omega1[i] = o.omega.w1;
    out.omega2[i] = o.omega.w2;
    out.omega3[i] = o.omega.w3;
    z[i] = o.omega.z();
  }
  out.min_abs_z = std::abs(z.front());
  for (const auto& zi : z) out.min_abs_z = std::min(out.min_abs_z, std::abs(zi));

  out.theta = unwrap_phase(z, 0.0);
  out.theta_end = out.theta.back();
  if (!(std::abs(out.theta_end) <= 1e-6)) {
    std::ostringstream msg;
    msg << "z winds around the origin: theta(1) = " << out.theta_end;
    throw Error(ErrorCode::WindingNonzero, msg.str());
  }
  return out;
}

WarpSample smoothstep(double t, double T, int k) {
  if (!(T > 0.0)) throw Error(ErrorCode::InvalidArgument, "warp duration must be positive");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "warp order must be >= 1");
  if (t < -1e-12 * T || t > T * (1.0 + 1e-12)) throw Error(ErrorCode::InvalidArgument, "warp time outside [0, T]");

  const double u = std::clamp(t / T, 0.0, 1.0);
  double s = 0.0;
  for (int n = 0; n <= k; ++n) {
    const double term = binomial(k + n, n) * binomial(2 * k + 1, k - n) * std::pow(u, k + 1 + n);
    s += (n % 2 == 0) ? term : -term;
  }
  // S'(u) = (2k+1)!/(k!)^2 u^k (1-u)^k
  const double lead = (k + 1) * binomial(2 * k + 1, k);
  const double ds_du = lead * std::pow(u * (1.0 - u), k);
  return {std::clamp(s, 0.0, 1.0), ds_du / T};
}

namespace {

SSchedule plan_virtual(const UnitQuaternion& qbar, TargetDecomposition& dec) {
  dec = decompose_target(qbar);
  return controls_s(build_cubics(dec));
}

// Rotation by -eta_bar in the control plane.
ControlPair unrotate(const ControlPair& c, double eta_bar) {
  const double ce = std::cos(eta_bar), se = std::sin(eta_bar);
  return {ce * c.u1 + se * c.u2, -se * c.u1 + ce * c.u2};
}

}  // namespace

PulseSchedule synthesize(const UnitQuaternion& qbar, const SynthesisOptions& opts) {
  if (!(opts.T > 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  if (opts.N < 64) throw Error(ErrorCode::InvalidArgument, "N must be at least 64");
  if (opts.k < 1) throw Error(ErrorCode::InvalidArgument, "warp order k must be >= 1");

  TargetDecomposition dec;
  const SSchedule plan = plan_virtual(qbar, dec);

  PulseSchedule out;
  out.interpolation = Interpolation::Cubic;
  out.target = qbar;
  out.T = opts.T;
  out.N = opts.N;
  out.warp_order = opts.k;
  out.eta_bar = dec.eta_bar;
  out.min_abs_z = plan.min_abs_z;
  out.t.resize(opts.N + 1);
  out.u1.resize(opts.N + 1);
  out.u2.resize(opts.N + 1);
  for (int i = 0; i <= opts.N; ++i) {
    const double t = (i == opts.N) ? opts.T : opts.T * i / opts.N;
    const WarpSample w = smoothstep(t, opts.T, opts.k);
    const ControlPair c = unrotate(plan.at(w.s), dec.eta_bar);
    out.t[i] = t;
    out.u1[i] = w.ds_dt * c.u1;
    out.u2[i] = w.ds_dt * c.u2;
  }
  return out;
}

PulseSchedule synthesize_virtual(const UnitQuaternion& qbar, int N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
  TargetDecomposition dec;
  const SSchedule plan = plan_virtual(qbar, dec);

  PulseSchedule out;
  out.target = qbar;
  out.T = 1.0;
  out.N = N;
  out.eta_bar = dec.eta_bar;
  out.min_abs_z = plan.min_abs_z;
  for (int i = 0; i <= N; ++i) {
    const double s = (i == N) ? 1.0 : static_cast<double>(i) / N;
    const ControlPair c = unrotate(plan.at(s), dec.eta_bar);
    out.t.push_back(s);
    out.u1.push_back(c.u1);
    out.u2.push_back(c.u2);
  }
  return out;
}

PulseSchedule rotate_controls(PulseSchedule schedule, double eta) {
  const double ce = std::cos(eta), se = std::sin(eta);
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const double a = schedule.u1[i], b = schedule.u2[i];
    schedule.u1[i] = ce * a - se * b;
    schedule.u2[i] = se * a + ce * b;
  }
  schedule.target = rotate_target(schedule.target, eta);
  schedule.eta_bar = std::fmod(schedule.eta_bar - eta, 2.0 * kPi);
  if (schedule.eta_bar < 0.0) schedule.eta_bar += 2.0 * kPi;
  return schedule;
}

UnitQuaternion rotate_target(const UnitQuaternion& q, double eta) {
  const double ce = std::cos(eta), se = std::sin(eta);
  return UnitQuaternion(q.w(), ce * q.x() - se * q.y(), se * q.x() + ce * q.y(), q.z());
}

}  // namespace qflat
