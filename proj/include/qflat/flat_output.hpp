#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qflat/quaternion.hpp"

namespace qflat {

/// Point of the orbit space H1/K, K = {exp(phi e1)}, realized as a unit
/// imaginary quaternion. Throws NotUnit if |y| deviates from 1 by more than 1e-9.
class FlatPoint {
 public:
  explicit FlatPoint(const ImagQuaternion& y);

  const ImagQuaternion& value() const { return y_; }

 private:
  ImagQuaternion y_;
};

/// Components of (dY/dt) Y* in the basis e1, e2, e3.
struct BodyVelocity {
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;

  /// z = w2 - i w3; the flat curve is regular where z != 0.
  std::complex<double> z() const { return {w2, -w3}; }
};

/// Selects one of the four state/control trajectories sharing a flat output.
class BranchIndex {
 public:
  explicit BranchIndex(int n);
  int value() const { return n_; }

 private:
  int n_;
};

/// A lift s -> Y(s) of a flat-output curve sampled on a uniform grid, with
/// analytic first and second derivatives.
struct LiftSamplePath {
  std::vector<double> s;
  std::vector<UnitQuaternion> Y;
  std::vector<Quaternion> dY;
  std::vector<Quaternion> ddY;

  /// Throws InvalidArgument on ragged or non-increasing data and NotTangent if
  /// Re(Y' Y*) exceeds 1e-9.
  void validate() const;
};

struct InversionResult {
  std::vector<UnitQuaternion> q;
  std::vector<double> u1;
  std::vector<double> u2;
  std::vector<double> theta;
};

/// Flat output y = q* e1 q. Constant on K-orbits: h(exp(phi e1) q) = h(q).
FlatPoint h(const UnitQuaternion& q);

/// Right-translation action on the flat output: g* y g = h(q g) when y = h(q).
FlatPoint group_action(const UnitQuaternion& g, const FlatPoint& y);

/// Local right inverse of h: the shortest rotation carrying e1 onto y.
/// Throws SectionSingularity within 1e-9 rad of -e1.
UnitQuaternion section(const FlatPoint& y);

/// Imaginary part of Ydot Y*. Throws NotTangent when |Re(Ydot Y*)| > 1e-9.
BodyVelocity body_velocity(const UnitQuaternion& Y, const Quaternion& Ydot);

/// Continuous argument of a sampled complex path. The first angle is the
/// representative of arg(z0) nearest to theta0. Throws SingularFlatCurve when
/// some |z_i| <= 1e-12 and GridTooCoarse when consecutive arguments jump by
/// pi/2 or more.
std::vector<double> unwrap_phase(std::span<const std::complex<double>> zs, double theta0);

/// State and controls of branch n for a sampled lift:
///   q  = e1^n exp((theta/2) e1) Y
///   u1 = w1 + (w3 w2' - w2 w3') / (2 (w2^2 + w3^2))
///   u2 = (-1)^n sqrt(w2^2 + w3^2)
/// with theta the continuous argument of w2 - i w3 starting at its principal
/// value. Derivatives w' come from (Y' Y*)' = Y'' Y* + Y' (Y')*.
InversionResult invert(const LiftSamplePath& path, BranchIndex n);

}  // namespace qflat
