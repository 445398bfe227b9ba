#include "qflat/quaternion.hpp"

#include <ostream>
#include <sstream>

#include "qflat/error.hpp"

namespace qflat {

UnitQuaternion::UnitQuaternion(const Quaternion& q) {
  const double n = q.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) >= kRenormTolerance) {
    std::ostringstream msg;
    msg << "quaternion " << q << " has norm " << n;
    throw Error(ErrorCode::NotUnit, msg.str());
  }
  q_ = q * (1.0 / n);
}

UnitQuaternion UnitQuaternion::conjugate() const { return {qflat::conj(q_), Trusted{}}; }

UnitQuaternion UnitQuaternion::operator-() const { return {-q_, Trusted{}}; }

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  const Quaternion p = a.q_ * b.q_;
  return {p * (1.0 / p.norm()), UnitQuaternion::Trusted{}};
}

UnitQuaternion conj(const UnitQuaternion& q) { return q.conjugate(); }

UnitQuaternion normalize(const Quaternion& q) {
  const double n = q.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::NotUnit, "cannot normalize a zero quaternion");
  return UnitQuaternion(q * (1.0 / n));
}

UnitQuaternion exp_pure(const ImagQuaternion& v) {
  const double angle = v.norm();
  double sinc = 0.0;
  if (angle < 1e-8) {
    sinc = 1.0 - angle * angle / 6.0;
  } else {
    sinc = std::sin(angle) / angle;
  }
  return UnitQuaternion(Quaternion{std::cos(angle), v.x * sinc, v.y * sinc, v.z * sinc});
}

ImagQuaternion rotate_vector(const UnitQuaternion& q, const ImagQuaternion& v) {
  const Quaternion& p = q;
  return (conj(p) * Quaternion(v) * p).imag();
}

SU2Matrix SU2Matrix::operator*(const SU2Matrix& o) const {
  SU2Matrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
  return r;
}

std::complex<double> SU2Matrix::det() const { return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0); }

double SU2Matrix::unitarity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::complex<double> s = (*this)(i, 0) * std::conj((*this)(j, 0)) + (*this)(i, 1) * std::conj((*this)(j, 1));
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

SU2Matrix to_su2(const UnitQuaternion& q) {
  using C = std::complex<double>;
  SU2Matrix u;
  u(0, 0) = C(q.w(), -q.z());
  u(0, 1) = C(-q.y(), -q.x());
  u(1, 0) = C(q.y(), -q.x());
  u(1, 1) = C(q.w(), q.z());
  return u;
}

UnitQuaternion from_su2(const SU2Matrix& u) {
  const double defect = u.unitarity_defect();
  const double det_err = std::abs(u.det() - 1.0);
  if (!(defect <= 1e-9) || !(det_err <= 1e-9)) {
    std::ostringstream msg;
    msg << "unitarity defect " << defect << ", |det - 1| = " << det_err;
    throw Error(ErrorCode::NotSpecialUnitary, msg.str());
  }
  return UnitQuaternion(Quaternion{u(0, 0).real(), -u(1, 0).imag(), u(1, 0).real(), -u(0, 0).imag()});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q) { return os << q.value(); }

std::ostream& operator<<(std::ostream& os, const ImagQuaternion& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

}  // namespace qflat
