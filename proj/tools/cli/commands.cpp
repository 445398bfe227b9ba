#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "cli/schedule_io.hpp"
#include "qflat/error.hpp"
#include "qflat/planner.hpp"
#include "qflat/propagator.hpp"
#include "qflat/zyz.hpp"

namespace qflat::cli {

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_jump(const PulseSchedule& s) {
  double m = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i)
    m = std::max({m, std::abs(s.u1[i] - s.u1[i - 1]), std::abs(s.u2[i] - s.u2[i - 1])});
  return m;
}

// Smooth: vanishing endpoint controls and no sample-to-sample jump larger than
// a tenth of the peak amplitude.
bool is_smooth(const PulseSchedule& s) {
  if (s.interpolation == Interpolation::Hold) return false;
  const bool ends = s.u1.front() == 0.0 && s.u2.front() == 0.0 && s.u1.back() == 0.0 && s.u2.back() == 0.0;
  const double peak = std::max(max_abs(s.u1), max_abs(s.u2));
  return ends && max_jump(s) <= 0.1 * std::max(peak, 1e-300);
}

PropagationResult run(const PulseSchedule& s, double delta_r = 0.0, double h = 0.0, bool record = false) {
  PropagationOptions opts;
  opts.delta_r = delta_r;
  opts.h = h;
  opts.record_trajectory = record;
  return propagate(s, opts);
}

}  // namespace

int cmd_plan(const PlanArgs& args, std::ostream& log) {
  const UnitQuaternion target = args.gate.resolve();
  const SSchedule diag = controls_s(build_cubics(decompose_target(target)));
  const PulseSchedule schedule = synthesize(target, {args.T, args.N, args.k});
  write_schedule(schedule, args.out);

  const bool endpoints_zero = schedule.u1.front() == 0.0 && schedule.u2.front() == 0.0 &&
                              schedule.u1.back() == 0.0 && schedule.u2.back() == 0.0;
  log << std::setprecision(6);
  log << "gate        " << args.gate.describe() << " -> " << target << '\n';
  log << "T, N, k     " << args.T << ", " << args.N << ", " << args.k << '\n';
  log << "eta_bar     " << schedule.eta_bar << '\n';
  log << "min|z|      " << diag.min_abs_z << '\n';
  log << "|theta(1)|  " << std::abs(diag.theta_end) << '\n';
  log << "u(0)=u(T)=0 " << (endpoints_zero ? "yes" : "NO") << '\n';
  log << "max|u1|     " << max_abs(schedule.u1) << '\n';
  log << "max|u2|     " << max_abs(schedule.u2) << '\n';
  log << "wrote       " << args.out << " and " << manifest_path(args.out).string() << '\n';
  return endpoints_zero ? 0 : 1;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& log) {
  const PulseSchedule schedule = read_schedule(args.schedule);
  if (schedule.size() < 2) throw Error(ErrorCode::InvalidArgument, "schedule '" + args.schedule + "' is empty");
  const PropagationResult result = run(schedule, args.delta_r, args.h, !args.out.empty());
  if (!args.out.empty()) write_trajectory(result, args.out);

  log << std::setprecision(std::numeric_limits<double>::max_digits10);
  log << "final state " << result.final_state << '\n';
  log << "target      " << schedule.target << '\n';
  log << "delta_r     " << args.delta_r << '\n';
  log << "fidelity    " << fidelity(result.final_state, schedule.target) << '\n';
  log << "norm drift  " << result.max_norm_drift << '\n';
  return 0;
}

int cmd_compare(const CompareArgs& args, std::ostream& log) {
  const UnitQuaternion target = args.gate.resolve();
  const EulerE1E2E1 angles = euler_decompose(target);
  const PulseSchedule zyz = zyz_schedule(angles, args.T);
  const double zyz_fid = fidelity(run(zyz).final_state, target);

  std::string flat_u1 = "rejected", flat_u2 = "rejected", flat_fid = "rejected", flat_smooth = "rejected";
  try {
    const PulseSchedule flat = synthesize(target, {args.T, args.N, args.k});
    auto fmt = [](double v) {
      std::ostringstream s;
      s << std::setprecision(10) << v;
      return s.str();
    };
    flat_u1 = fmt(max_abs(flat.u1));
    flat_u2 = fmt(max_abs(flat.u2));
    flat_fid = fmt(fidelity(run(flat).final_state, target));
    flat_smooth = is_smooth(flat) ? "yes" : "no";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IdentityTarget) throw;
  }

  log << std::setprecision(10);
  log << "gate " << args.gate.describe() << " -> " << target << ", T = " << args.T << '\n';
  log << "zyz angles (a, b, c) = (" << angles.a << ", " << angles.b << ", " << angles.c << ")\n";
  log << std::left << std::setw(12) << "metric" << std::setw(20) << "flat" << "zyz\n";
  log << std::setw(12) << "max|u1|" << std::setw(20) << flat_u1 << max_abs(zyz.u1) << '\n';
  log << std::setw(12) << "max|u2|" << std::setw(20) << flat_u2 << max_abs(zyz.u2) << '\n';
  log << std::setw(12) << "fidelity" << std::setw(20) << flat_fid << zyz_fid << '\n';
  log << std::setw(12) << "smooth" << std::setw(20) << flat_smooth << (is_smooth(zyz) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_sweep(const SweepArgs& args, std::ostream& log) {
  if (args.steps < 1) throw Error(ErrorCode::InvalidArgument, "detuning sweep needs at least one step");
  if (args.steps > 1 && !(args.delta_r_max > args.delta_r_min))
    throw Error(ErrorCode::InvalidArgument, "empty detuning range");

  const UnitQuaternion target = args.gate.resolve();
  const PulseSchedule schedule = synthesize(target, {args.T, args.N, args.k});
  std::vector<double> grid(static_cast<std::size_t>(args.steps));
  for (int i = 0; i < args.steps; ++i)
    grid[i] = args.steps == 1 ? args.delta_r_min
                              : args.delta_r_min + (args.delta_r_max - args.delta_r_min) * i / (args.steps - 1);
  const auto sweep = detuning_sweep(schedule, grid, target);

  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw IoError("cannot open '" + args.out + "' for writing");
  }
  std::ostream& out = args.out.empty() ? log : file;
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "delta_r,fidelity\n";
  for (const auto& p : sweep) out << p.delta_r << ',' << p.fidelity << '\n';
  if (!out) throw IoError("write to '" + args.out + "' failed");
  if (!args.out.empty()) log << "wrote " << sweep.size() << " points to " << args.out << '\n';
  return 0;
}

}  // namespace qflat::cli
