#pragma once

#include <iosfwd>
#include <string>

#include "cli/gate_spec.hpp"

namespace qflat::cli {

struct PlanArgs {
  GateSpec gate;
  double T = 1.0;
  int N = 2048;
  int k = 1;
  std::string out = "schedule.csv";
};

struct SimulateArgs {
  std::string schedule;
  double delta_r = 0.0;
  double h = 0.0;  // <= 0: T / 8192
  std::string out;  // trajectory CSV; empty to skip
};

struct CompareArgs {
  GateSpec gate;
  double T = 1.0;
  int N = 2048;
  int k = 1;
};

struct SweepArgs {
  GateSpec gate;
  double T = 1.0;
  int N = 2048;
  int k = 1;
  double delta_r_min = 0.0;
  double delta_r_max = 0.0;
  int steps = 1;
  std::string out;  // empty: CSV to the report stream
};

// Each command writes its report to `log` and returns the process exit code.
// Domain failures throw qflat::Error, file failures throw IoError.
int cmd_plan(const PlanArgs& args, std::ostream& log);
int cmd_simulate(const SimulateArgs& args, std::ostream& log);
int cmd_compare(const CompareArgs& args, std::ostream& log);
int cmd_sweep(const SweepArgs& args, std::ostream& log);
int cmd_selftest(std::ostream& log);

}  // namespace qflat::cli
