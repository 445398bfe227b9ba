#include "cli/schedule_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace qflat::cli {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

double parse_field(const std::string& field, const std::filesystem::path& path, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || *end != '\0')
    throw IoError(path.string() + ":" + std::to_string(line) + ": bad number '" + field + "'");
  return v;
}

}  // namespace

const char* to_string(Interpolation mode) {
  switch (mode) {
    case Interpolation::Cubic: return "cubic";
    case Interpolation::Linear: return "linear";
    case Interpolation::Hold: return "hold";
  }
  return "cubic";
}

std::filesystem::path manifest_path(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p.replace_extension(".json");
  return p;
}

void write_schedule(const PulseSchedule& schedule, const std::filesystem::path& csv) {
  {
    std::ofstream out = open_out(csv);
    out << "t,u1,u2\n";
    for (std::size_t i = 0; i < schedule.size(); ++i)
      out << schedule.t[i] << ',' << schedule.u1[i] << ',' << schedule.u2[i] << '\n';
    if (!out) throw IoError("write to '" + csv.string() + "' failed");
  }

  const Quaternion& q = schedule.target;
  nlohmann::ordered_json manifest = {
      {"format_version", kFormatVersion},
      {"target", {q.w, q.x, q.y, q.z}},
      {"T", schedule.T},
      {"N", schedule.N},
      {"k", schedule.warp_order},
      {"eta_bar", schedule.eta_bar},
      {"min_abs_z", schedule.min_abs_z},
      {"interpolation", to_string(schedule.interpolation)},
  };
  std::ofstream out = open_out(manifest_path(csv));
  out << manifest.dump(2) << '\n';
  if (!out) throw IoError("write to '" + manifest_path(csv).string() + "' failed");
}

PulseSchedule read_schedule(const std::filesystem::path& csv) {
  PulseSchedule schedule;
  {
    std::ifstream in = open_in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "t,u1,u2")
      throw IoError(csv.string() + ": expected header 't,u1,u2'");
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::istringstream row(line);
      std::string a, b, c;
      if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c))
        throw IoError(csv.string() + ":" + std::to_string(lineno) + ": expected three columns");
      schedule.t.push_back(parse_field(a, csv, lineno));
      schedule.u1.push_back(parse_field(b, csv, lineno));
      schedule.u2.push_back(parse_field(c, csv, lineno));
    }
  }

  const auto mpath = manifest_path(csv);
  std::ifstream in = open_in(mpath);
  try {
    const auto m = nlohmann::json::parse(in);
    if (m.at("format_version").get<int>() != kFormatVersion)
      throw IoError(mpath.string() + ": unsupported format_version");
    const auto target = m.at("target").get<std::vector<double>>();
    if (target.size() != 4) throw IoError(mpath.string() + ": target must have four components");
    schedule.target = UnitQuaternion(target[0], target[1], target[2], target[3]);
    schedule.T = m.at("T").get<double>();
    schedule.N = m.at("N").get<int>();
    schedule.warp_order = m.at("k").get<int>();
    schedule.eta_bar = m.at("eta_bar").get<double>();
    schedule.min_abs_z = m.at("min_abs_z").get<double>();
    const auto interp = m.at("interpolation").get<std::string>();
    if (interp == "hold") schedule.interpolation = Interpolation::Hold;
    else if (interp == "linear") schedule.interpolation = Interpolation::Linear;
    else if (interp == "cubic") schedule.interpolation = Interpolation::Cubic;
    else throw IoError(mpath.string() + ": unknown interpolation '" + interp + "'");
  } catch (const nlohmann::json::exception& e) {
    throw IoError(mpath.string() + ": " + e.what());
  }
  return schedule;
}

void write_trajectory(const PropagationResult& result, const std::filesystem::path& csv) {
  std::ofstream out = open_out(csv);
  out << "t,q0,q1,q2,q3\n";
  for (std::size_t i = 0; i < result.t.size(); ++i) {
    const Quaternion& q = result.q[i];
    out << result.t[i] << ',' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << '\n';
  }
  if (!out) throw IoError("write to '" + csv.string() + "' failed");
}

}  // namespace qflat::cli
