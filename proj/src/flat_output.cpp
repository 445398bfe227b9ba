#include "qflat/flat_output.hpp"

#include <numbers>
#include <sstream>

#include "qflat/error.hpp"

namespace qflat {

namespace {

constexpr double kPi = std::numbers::pi;

ImagQuaternion conjugate_by(const Quaternion& g, const ImagQuaternion& v) {
  return (conj(g) * Quaternion(v) * g).imag();
}

}  // namespace

FlatPoint::FlatPoint(const ImagQuaternion& y) : y_(y) {
  const double n = y.norm();
  if (!(std::abs(n - 1.0) <= 1e-9)) {
    std::ostringstream msg;
    msg << "flat point " << y << " has norm " << n;
    throw Error(ErrorCode::NotUnit, msg.str());
  }
}

BranchIndex::BranchIndex(int n) : n_(n) {
  if (n < 0 || n > 3) throw Error(ErrorCode::InvalidArgument, "branch index must be in {0,1,2,3}");
}

void LiftSamplePath::validate() const {
  const std::size_t n = s.size();
  if (n < 2 || Y.size() != n || dY.size() != n || ddY.size() != n)
    throw Error(ErrorCode::InvalidArgument, "lift path needs at least two samples of Y, Y', Y''");
  for (std::size_t i = 1; i < n; ++i)
    if (!(s[i] > s[i - 1])) throw Error(ErrorCode::InvalidArgument, "lift grid must be strictly increasing");
  for (std::size_t i = 0; i < n; ++i) {
    const double re = (dY[i] * conj(Y[i].value())).w;
    if (!(std::abs(re) <= 1e-9)) {
      std::ostringstream msg;
      msg << "Re(Y' Y*) = " << re << " at sample " << i;
      throw Error(ErrorCode::NotTangent, msg.str());
    }
  }
}

FlatPoint h(const UnitQuaternion& q) {
  return FlatPoint(conjugate_by(q, {1.0, 0.0, 0.0}));
}

FlatPoint group_action(const UnitQuaternion& g, const FlatPoint& y) {
  return FlatPoint(conjugate_by(g, y.value()));
}

UnitQuaternion section(const FlatPoint& y) {
  const ImagQuaternion e1{1.0, 0.0, 0.0};
  const ImagQuaternion& v = y.value();
  const double c = dot(e1, v);
  const double angle = std::atan2(cross(e1, v).norm(), c);
  if (kPi - angle <= 1e-9) throw Error(ErrorCode::SectionSingularity, "flat point is antipodal to e1");
  if (angle <= 1e-9) return UnitQuaternion::identity();
  // Half-angle form of exp(-(angle/2) n), n = e1 x y / |e1 x y|.
  const ImagQuaternion axis = cross(e1, v);
  return UnitQuaternion(Quaternion{1.0 + c, -axis.x, -axis.y, -axis.z} * (1.0 / std::sqrt(2.0 * (1.0 + c))));
}

BodyVelocity body_velocity(const UnitQuaternion& Y, const Quaternion& Ydot) {
  const Quaternion w = Ydot * conj(Y.value());
  if (!(std::abs(w.w) <= 1e-9)) {
    std::ostringstream msg;
    msg << "Re(Ydot Y*) = " << w.w;
    throw Error(ErrorCode::NotTangent, msg.str());
  }
  return {w.x, w.y, w.z};
}

std::vector<double> unwrap_phase(std::span<const std::complex<double>> zs, double theta0) {
  std::vector<double> theta;
  theta.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!(std::abs(zs[i]) > 1e-12)) {
      std::ostringstream msg;
      msg << "|z| = " << std::abs(zs[i]) << " at sample " << i;
      throw Error(ErrorCode::SingularFlatCurve, msg.str());
    }
    if (i == 0) {
      const double a = std::arg(zs[0]);
      theta.push_back(a + 2.0 * kPi * std::round((theta0 - a) / (2.0 * kPi)));
      continue;
    }
    const double step = std::arg(zs[i] * std::conj(zs[i - 1]));
    if (std::abs(step) >= kPi / 2.0) {
      std::ostringstream msg;
      msg << "argument jumps by " << step << " between samples " << i - 1 << " and " << i;
      throw Error(ErrorCode::GridTooCoarse, msg.str());
    }
    theta.push_back(theta.back() + step);
  }
  return theta;
}

InversionResult invert(const LiftSamplePath& path, BranchIndex n) {
  path.validate();
  const std::size_t count = path.s.size();

  std::vector<BodyVelocity> omega(count);
  std::vector<std::complex<double>> z(count);
  for (std::size_t i = 0; i < count; ++i) {
    omega[i] = body_velocity(path.Y[i], path.dY[i]);
    z[i] = omega[i].z();
  }
  const std::vector<double> theta = unwrap_phase(z, std::arg(z.front()));

  const Quaternion branch_factor = [&] {
    Quaternion f = Quaternion::one();
    for (int k = 0; k < n.value(); ++k) f = Quaternion::e1() * f;
    return f;
  }();
  const double sign = (n.value() % 2 == 0) ? 1.0 : -1.0;

  InversionResult out;
  out.q.reserve(count);
  out.u1.reserve(count);
  out.u2.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // d/ds (Y' Y*) = Y'' Y* + Y' (Y')*
    const Quaternion dw = path.ddY[i] * conj(path.Y[i].value()) + path.dY[i] * conj(path.dY[i]);
    const double w2 = omega[i].w2;
    const double w3 = omega[i].w3;
    const double r2 = w2 * w2 + w3 * w3;
    const UnitQuaternion k = exp_pure({theta[i] / 2.0, 0.0, 0.0});
    out.q.emplace_back(branch_factor * k.value() * path.Y[i].value());
    out.u1.push_back(omega[i].w1 + (w3 * dw.y - w2 * dw.z) / (2.0 * r2));
    out.u2.push_back(sign * std::sqrt(r2));
  }
  out.theta = theta;
  return out;
}

}  // namespace qflat
