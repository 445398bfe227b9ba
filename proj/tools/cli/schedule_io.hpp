#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qflat/propagator.hpp"
#include "qflat/schedule.hpp"

namespace qflat::cli {

/// File-system or format failure; maps to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

const char* to_string(Interpolation mode);

/// Sidecar manifest for a schedule CSV: same path with extension ".json".
std::filesystem::path manifest_path(const std::filesystem::path& csv);

/// Writes `t,u1,u2` with 17 significant digits and the JSON manifest
/// {format_version, target [w,x,y,z], T, N, k, eta_bar, min_abs_z, interpolation}.
void write_schedule(const PulseSchedule& schedule, const std::filesystem::path& csv);

PulseSchedule read_schedule(const std::filesystem::path& csv);

/// Writes `t,q0,q1,q2,q3`.
void write_trajectory(const PropagationResult& result, const std::filesystem::path& csv);

}  // namespace qflat::cli
