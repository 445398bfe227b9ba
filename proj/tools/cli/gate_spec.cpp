#include "cli/gate_spec.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "qflat/error.hpp"

namespace qflat::cli {

namespace {

std::vector<double> parse_list(std::string_view text, std::size_t expected) {
  std::vector<double> values;
  std::string buf(text);
  const char* p = buf.c_str();
  while (*p != '\0') {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) throw Error(ErrorCode::InvalidArgument, "cannot parse number list '" + buf + "'");
    values.push_back(v);
    p = end;
    while (*p == ' ') ++p;
    if (*p == ',') ++p;
    else if (*p != '\0') throw Error(ErrorCode::InvalidArgument, "cannot parse number list '" + buf + "'");
  }
  if (values.size() != expected)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(expected) + " comma-separated numbers, got '" + buf + "'");
  return values;
}

}  // namespace

UnitQuaternion named_gate(std::string_view name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "I" || name == "identity") return UnitQuaternion::identity();
  if (name == "X") return {0.0, 1.0, 0.0, 0.0};
  if (name == "Y") return {0.0, 0.0, 1.0, 0.0};
  if (name == "Z") return {0.0, 0.0, 0.0, 1.0};
  if (name == "H") return {0.0, r, 0.0, r};
  if (name == "minus-one") return {-1.0, 0.0, 0.0, 0.0};
  throw Error(ErrorCode::InvalidArgument, "unknown gate '" + std::string(name) + "' (use I, X, Y, Z, H, minus-one)");
}

UnitQuaternion parse_quaternion(std::string_view text) {
  const auto v = parse_list(text, 4);
  return {v[0], v[1], v[2], v[3]};
}

SU2Matrix parse_su2(std::string_view text) {
  const auto v = parse_list(text, 8);
  SU2Matrix u;
  for (std::size_t i = 0; i < 4; ++i) u.a[i] = {v[2 * i], v[2 * i + 1]};
  return u;
}

UnitQuaternion GateSpec::resolve() const {
  const int count = int(name.has_value()) + int(quat.has_value()) + int(su2.has_value());
  if (count != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --gate, --quat, --su2");
  if (name) return named_gate(*name);
  if (quat) return parse_quaternion(*quat);
  return from_su2(parse_su2(*su2));
}

std::string GateSpec::describe() const {
  if (name) return *name;
  if (quat) return "quat(" + *quat + ")";
  if (su2) return "su2(" + *su2 + ")";
  return "<none>";
}

}  // namespace qflat::cli
