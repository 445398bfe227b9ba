#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/gate_spec.hpp"
#include "cli/schedule_io.hpp"
#include "qflat/error.hpp"
#include "qflat/planner.hpp"
#include "qflat/propagator.hpp"
#include "test_support.hpp"

using namespace qflat;
using namespace qflat::cli;
using namespace qflat::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qflat_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

GateSpec named(const std::string& n) {
  GateSpec g;
  g.name = n;
  return g;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qflat::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("named gates") {
  CHECK(dist(named_gate("X").value(), Quaternion::e1()) == 0.0);
  CHECK(dist(named_gate("Y").value(), Quaternion::e2()) == 0.0);
  CHECK(dist(named_gate("Z").value(), Quaternion::e3()) == 0.0);
  CHECK(dist(named_gate("H").value(), Quaternion{0, 1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0)}) <= 1e-15);
  CHECK(dist(named_gate("minus-one").value(), Quaternion{-1, 0, 0, 0}) == 0.0);
  CHECK(dist(named_gate("I").value(), Quaternion::one()) == 0.0);
  CHECK(code_of([] { named_gate("T"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("quaternion and SU(2) gate strings") {
  CHECK(dist(parse_quaternion("0.6, 0, 0.8, 0").value(), Quaternion{0.6, 0, 0.8, 0}) <= 1e-16);
  CHECK(code_of([] { parse_quaternion("1,2,3,4"); }) == ErrorCode::NotUnit);
  CHECK(code_of([] { parse_quaternion("1,0,0"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_quaternion("1,0,0,x"); }) == ErrorCode::InvalidArgument);

  // Z as a matrix: diag(-i, i).
  GateSpec g;
  g.su2 = "0,-1,0,0,0,0,0,1";
  CHECK(dist(g.resolve().value(), Quaternion::e3()) <= 1e-15);

  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    const UnitQuaternion q = random_unit(rng);
    const SU2Matrix m = to_su2(q);
    std::ostringstream text;
    text.precision(17);
    for (int k = 0; k < 4; ++k) text << (k ? "," : "") << m.a[k].real() << "," << m.a[k].imag();
    GateSpec s;
    s.su2 = text.str();
    CHECK(dist(s.resolve().value(), q.value()) <= 1e-14);
  }
  GateSpec bad;
  bad.su2 = "2,0,0,0,0,0,0.5,0";
  CHECK(code_of([&] { bad.resolve(); }) == ErrorCode::NotSpecialUnitary);

  GateSpec none;
  CHECK(code_of([&] { none.resolve(); }) == ErrorCode::InvalidArgument);
  GateSpec two = named("X");
  two.quat = "1,0,0,0";
  CHECK(code_of([&] { two.resolve(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("plan writes a schedule that round-trips") {
  TempDir dir;
  PlanArgs args;
  args.gate = named("Z");
  args.T = 2.0;
  args.out = (dir.path / "zplan.csv").string();
  std::ostringstream log;
  REQUIRE(cmd_plan(args, log) == 0);
  CHECK(fs::exists(dir.path / "zplan.json"));
  CHECK(slurp(dir.path / "zplan.csv").rfind("t,u1,u2\n", 0) == 0);

  const PulseSchedule original = synthesize(named_gate("Z"), {2.0, 2048, 1});
  const PulseSchedule loaded = read_schedule(dir.path / "zplan.csv");
  REQUIRE(loaded.size() == original.size());
  CHECK(loaded.T == 2.0);
  CHECK(loaded.N == 2048);
  CHECK(loaded.warp_order == 1);
  CHECK(loaded.interpolation == Interpolation::Cubic);
  CHECK(dist(loaded.target.value(), Quaternion::e3()) == 0.0);
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded.t[i] == original.t[i]);
    CHECK(loaded.u1[i] == original.u1[i]);
    CHECK(loaded.u2[i] == original.u2[i]);
  }
  CHECK(dist(propagate(loaded).final_state.value(), propagate(original).final_state.value()) <= 1e-12);
}

TEST_CASE("plan output is deterministic") {
  TempDir dir;
  for (const char* name : {"a.csv", "b.csv"}) {
    PlanArgs args;
    args.gate = named("H");
    args.N = 512;
    args.k = 2;
    args.out = (dir.path / name).string();
    std::ostringstream log;
    REQUIRE(cmd_plan(args, log) == 0);
  }
  CHECK(slurp(dir.path / "a.csv") == slurp(dir.path / "b.csv"));
  CHECK(slurp(dir.path / "a.json") == slurp(dir.path / "b.json"));
}

TEST_CASE("plan rejects the identity") {
  PlanArgs args;
  args.gate.quat = "1,0,0,0";
  std::ostringstream log;
  CHECK(code_of([&] { cmd_plan(args, log); }) == ErrorCode::IdentityTarget);
}

TEST_CASE("plan minus-one has u1 = 0") {
  TempDir dir;
  PlanArgs args;
  args.gate = named("minus-one");
  args.out = (dir.path / "m1.csv").string();
  std::ostringstream log;
  REQUIRE(cmd_plan(args, log) == 0);
  const PulseSchedule s = read_schedule(args.out);
  for (double v : s.u1) CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("simulate") {
  TempDir dir;
  PlanArgs plan;
  plan.gate = named("Z");
  plan.T = 2.0;
  plan.out = (dir.path / "z.csv").string();
  std::ostringstream log;
  REQUIRE(cmd_plan(plan, log) == 0);

  SimulateArgs sim;
  sim.schedule = plan.out;
  sim.out = (dir.path / "traj.csv").string();
  std::ostringstream out;
  CHECK(cmd_simulate(sim, out) == 0);
  CHECK(out.str().find("fidelity") != std::string::npos);
  const std::string traj = slurp(dir.path / "traj.csv");
  CHECK(traj.rfind("t,q0,q1,q2,q3\n", 0) == 0);

  SimulateArgs missing;
  missing.schedule = (dir.path / "nope.csv").string();
  CHECK_THROWS_AS(cmd_simulate(missing, out), IoError);

  // Header only.
  std::ofstream(dir.path / "empty.csv") << "t,u1,u2\n";
  fs::copy_file(dir.path / "z.json", dir.path / "empty.json");
  SimulateArgs empty;
  empty.schedule = (dir.path / "empty.csv").string();
  CHECK(code_of([&] { cmd_simulate(empty, out); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sweep") {
  TempDir dir;
  SweepArgs args;
  args.gate = named("Z");
  args.T = 2.0;
  args.out = (dir.path / "sweep.csv").string();
  std::ostringstream log;
  REQUIRE(cmd_sweep(args, log) == 0);
  const PulseSchedule s = synthesize(named_gate("Z"), {2.0, 2048, 1});
  const double f = fidelity(propagate(s).final_state, named_gate("Z"));
  std::istringstream csv(slurp(args.out));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  CHECK(header == "delta_r,fidelity");
  CHECK(std::stod(row.substr(row.find(',') + 1)) == f);
  CHECK(!std::getline(csv, row));

  args.steps = 0;
  CHECK(code_of([&] { cmd_sweep(args, log); }) == ErrorCode::InvalidArgument);
  args.steps = 5;
  args.delta_r_min = 1.0;
  args.delta_r_max = 1.0;
  CHECK(code_of([&] { cmd_sweep(args, log); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("compare") {
  CompareArgs z;
  z.gate = named("Z");
  z.T = 2.0;
  std::ostringstream out;
  REQUIRE(cmd_compare(z, out) == 0);
  CHECK(out.str().find("2.35619449") != std::string::npos);

  CompareArgs id;
  id.gate = named("I");
  std::ostringstream idout;
  CHECK(cmd_compare(id, idout) == 0);
  CHECK(idout.str().find("rejected") != std::string::npos);

  CompareArgs m1;
  m1.gate = named("minus-one");
  std::ostringstream m1out;
  CHECK(cmd_compare(m1, m1out) == 0);
  CHECK(m1out.str().find("(0, 3.14159265") != std::string::npos);
}

TEST_CASE("selftest passes") {
  std::ostringstream out;
  CHECK(cmd_selftest(out) == 0);
  CHECK(out.str().find("[FAIL]") == std::string::npos);
}
