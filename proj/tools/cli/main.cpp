#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/schedule_io.hpp"
#include "qflat/error.hpp"

namespace {

void add_gate_options(CLI::App* cmd, qflat::cli::GateSpec& gate) {
  cmd->add_option_function<std::string>("--gate", [&gate](const std::string& v) { gate.name = v; },
                                        "named gate: I, X, Y, Z, H, minus-one");
  cmd->add_option_function<std::string>("--quat", [&gate](const std::string& v) { gate.quat = v; },
                                        "target quaternion w,x,y,z");
  cmd->add_option_function<std::string>("--su2", [&gate](const std::string& v) { gate.su2 = v; },
                                        "target SU(2) matrix re00,im00,re01,im01,re10,im10,re11,im11");
}

void add_plan_options(CLI::App* cmd, double& T, int& N, int& k) {
  cmd->add_option("--T", T, "transition time")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--N", N, "schedule intervals (samples = N + 1)")->capture_default_str()->check(CLI::Range(64, 1 << 24));
  cmd->add_option("--k", k, "time-warp smoothness order")->capture_default_str()->check(CLI::Range(1, 16));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qflat::cli;

  CLI::App app{"qflat: flatness-based single-pulse qubit gate synthesis"};
  app.require_subcommand(1);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "synthesize a smooth pulse for a target gate");
  add_gate_options(plan_cmd, plan.gate);
  add_plan_options(plan_cmd, plan.T, plan.N, plan.k);
  plan_cmd->add_option("--out", plan.out, "schedule CSV (manifest written next to it)")->capture_default_str();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "propagate a schedule file and report fidelity");
  sim_cmd->set_help_flag("--help", "Print this help message and exit");
  sim_cmd->add_option("schedule", sim.schedule, "schedule CSV")->required();
  sim_cmd->add_option("--delta-r", sim.delta_r, "detuning drift on e3")->capture_default_str();
  sim_cmd->add_option("--h", sim.h, "RK4 step (default T/8192)");
  sim_cmd->add_option("--out", sim.out, "trajectory CSV t,q0,q1,q2,q3");

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "flat pulse vs three-pulse e1-e2-e1 baseline");
  add_gate_options(cmp_cmd, cmp.gate);
  add_plan_options(cmp_cmd, cmp.T, cmp.N, cmp.k);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "terminal fidelity over a detuning range");
  add_gate_options(sweep_cmd, sweep.gate);
  add_plan_options(sweep_cmd, sweep.T, sweep.N, sweep.k);
  sweep_cmd->add_option("--delta-r-min", sweep.delta_r_min, "first detuning value")->capture_default_str();
  sweep_cmd->add_option("--delta-r-max", sweep.delta_r_max, "last detuning value")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "number of detuning values")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "CSV delta_r,fidelity (default stdout)");

  auto* self_cmd = app.add_subcommand("selftest", "run the built-in invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (plan_cmd->parsed()) return cmd_plan(plan, std::cout);
    if (sim_cmd->parsed()) return cmd_simulate(sim, std::cout);
    if (cmp_cmd->parsed()) return cmd_compare(cmp, std::cout);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, std::cout);
    if (self_cmd->parsed()) return cmd_selftest(std::cout);
  } catch (const qflat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
