#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qflat {

enum class ErrorCode {
  NotUnit,
  NotSpecialUnitary,
  SectionSingularity,
  NotTangent,
  SingularFlatCurve,
  GridTooCoarse,
  IdentityTarget,
  MonotonicityViolation,
  WindingNonzero,
  StepTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every qflat operation. The code identifies which
/// precondition or planning guarantee failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotSpecialUnitary: return "NotSpecialUnitary";
    case ErrorCode::SectionSingularity: return "SectionSingularity";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::SingularFlatCurve: return "SingularFlatCurve";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::IdentityTarget: return "IdentityTarget";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::WindingNonzero: return "WindingNonzero";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qflat
