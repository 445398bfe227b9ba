#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

namespace qflat {

/// Pure imaginary quaternion x e1 + y e2 + z e3. Used for rotation generators,
/// body velocities (rad/time) and points of the flat-output sphere.
struct ImagQuaternion {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr ImagQuaternion() = default;
  constexpr ImagQuaternion(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  double norm() const { return std::sqrt(x * x + y * y + z * z); }

  constexpr ImagQuaternion operator-() const { return {-x, -y, -z}; }
  constexpr ImagQuaternion operator+(const ImagQuaternion& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr ImagQuaternion operator-(const ImagQuaternion& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr ImagQuaternion operator*(double s) const { return {x * s, y * s, z * s}; }
  friend constexpr ImagQuaternion operator*(double s, const ImagQuaternion& v) { return v * s; }
};

constexpr double dot(const ImagQuaternion& a, const ImagQuaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr ImagQuaternion cross(const ImagQuaternion& a, const ImagQuaternion& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// General quaternion w + x e1 + y e2 + z e3, scalar first.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(const ImagQuaternion& v) : w(0.0), x(v.x), y(v.y), z(v.z) {}  // NOLINT

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion e1() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion e2() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion e3() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr ImagQuaternion imag() const { return {x, y, z}; }
  constexpr std::array<double, 4> coeffs() const { return {w, x, y, z}; }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  constexpr Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

  /// Hamilton product with e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
  constexpr Quaternion operator*(const Quaternion& b) const {
    return {w * b.w - x * b.x - y * b.y - z * b.z,
            w * b.x + x * b.w + y * b.z - z * b.y,
            w * b.y - x * b.z + y * b.w + z * b.x,
            w * b.z + x * b.y - y * b.x + z * b.w};
  }
};

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }
constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Element of H1, the unit quaternions. Construction renormalizes inputs whose
/// norm is within 1e-6 of one and throws Error(NotUnit) otherwise, so every
/// instance satisfies |q| = 1 to round-off.
class UnitQuaternion {
 public:
  static constexpr double kRenormTolerance = 1e-6;

  UnitQuaternion() : q_(Quaternion::one()) {}
  explicit UnitQuaternion(const Quaternion& q);
  UnitQuaternion(double w, double x, double y, double z) : UnitQuaternion(Quaternion{w, x, y, z}) {}

  static UnitQuaternion identity() { return {}; }

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT

  double w() const { return q_.w; }
  double x() const { return q_.x; }
  double y() const { return q_.y; }
  double z() const { return q_.z; }

  UnitQuaternion conjugate() const;
  UnitQuaternion operator-() const;

 private:
  struct Trusted {};
  UnitQuaternion(const Quaternion& q, Trusted) : q_(q) {}

  Quaternion q_;

  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b);
};

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b);
UnitQuaternion conj(const UnitQuaternion& q);

/// q / |q| for any nonzero finite q. Throws NotUnit for q = 0.
UnitQuaternion normalize(const Quaternion& q);

/// exp(v) = cos|v| + (v/|v|) sin|v|. Below |v| = 1e-8 the sine factor uses
/// the series v (1 - |v|^2/6).
UnitQuaternion exp_pure(const ImagQuaternion& v);

/// conj(q) v q. With this order exp_pure(phi n) rotates v about n by -2 phi;
/// e.g. rotate_vector(exp_pure((pi/4) e3), e1) = -e2.
ImagQuaternion rotate_vector(const UnitQuaternion& q, const ImagQuaternion& v);

/// 2x2 complex matrix, row-major. SU(2) validity is checked at from_su2.
struct SU2Matrix {
  std::array<std::complex<double>, 4> a{};

  std::complex<double>& operator()(int r, int c) { return a[static_cast<std::size_t>(2 * r + c)]; }
  const std::complex<double>& operator()(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }

  SU2Matrix operator*(const SU2Matrix& o) const;
  std::complex<double> det() const;
  /// Largest entry of |U U^dagger - I|.
  double unitarity_defect() const;
};

/// U = q0 - i (q1 sigma1 + q2 sigma2 + q3 sigma3), i.e. e_k = -i sigma_k.
SU2Matrix to_su2(const UnitQuaternion& q);
/// Inverse of to_su2. Throws NotSpecialUnitary when unitarity or det = 1
/// fails by more than 1e-9.
UnitQuaternion from_su2(const SU2Matrix& u);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q);
std::ostream& operator<<(std::ostream& os, const ImagQuaternion& v);

}  // namespace qflat
