#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "cli/commands.hpp"
#include "qflat/flat_output.hpp"
#include "qflat/planner.hpp"
#include "qflat/propagator.hpp"
#include "qflat/zyz.hpp"

namespace qflat::cli {

namespace {

UnitQuaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return normalize({n(rng), n(rng), n(rng), n(rng)});
}

struct Tally {
  std::ostream& log;
  int failed = 0;

  void report(const std::string& name, double worst, double tol) {
    const bool ok = worst <= tol;
    if (!ok) ++failed;
    log << (ok ? "[PASS] " : "[FAIL] ") << std::left << std::setw(34) << name << " worst " << std::setprecision(3)
        << worst << " (tol " << tol << ")\n";
  }
};

}  // namespace

int cmd_selftest(std::ostream& log) {
  std::mt19937_64 rng(20070101);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Tally tally{log};

  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const UnitQuaternion a = random_unit(rng), b = random_unit(rng);
    const SU2Matrix lhs = to_su2(a * b), rhs = to_su2(a) * to_su2(b);
    for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(lhs.a[j] - rhs.a[j]));
    worst = std::max(worst, (from_su2(to_su2(a)).value() - a.value()).norm());
  }
  tally.report("su2 homomorphism and round trip", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const UnitQuaternion q = random_unit(rng), g = random_unit(rng);
    const UnitQuaternion k = exp_pure({angle(rng), 0.0, 0.0});
    worst = std::max(worst, (h(k * q).value() - h(q).value()).norm());
    worst = std::max(worst, (h(q * g).value() - group_action(g, h(q)).value()).norm());
  }
  tally.report("flat output invariance", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const UnitQuaternion q = random_unit(rng);
    worst = std::max(worst, (euler_decompose(q).compose().value() - q.value()).norm());
  }
  tally.report("e1-e2-e1 decomposition", worst, 1e-12);

  worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const UnitQuaternion q = random_unit(rng);
    if ((q.value() - Quaternion::one()).norm() <= 1e-3) continue;
    const PulseSchedule s = synthesize(q, {1.0, 2048, 1});
    PropagationOptions opts;
    opts.record_trajectory = false;
    worst = std::max(worst, 1.0 - fidelity(propagate(s, opts).final_state, q));
  }
  tally.report("random target steering", worst, 1e-6);

  {
    const UnitQuaternion z{0.0, 0.0, 0.0, 1.0};
    const PulseSchedule s = synthesize(z, {2.0, 2048, 1});
    PropagationOptions opts;
    opts.record_trajectory = false;
    tally.report("Z gate, T = 2", 1.0 - fidelity(propagate(s, opts).final_state, z), 1e-6);
  }

  log << (tally.failed == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return tally.failed == 0 ? 0 : 1;
}

}  // namespace qflat::cli
