#include <doctest.h>

#include <random>

#include "qflat/error.hpp"
#include "qflat/quaternion.hpp"
#include "test_support.hpp"

using namespace qflat;
using namespace qflat::testing;

namespace {
const Quaternion kOne = Quaternion::one();
const Quaternion kE1 = Quaternion::e1();
const Quaternion kE2 = Quaternion::e2();
const Quaternion kE3 = Quaternion::e3();
}  // namespace

TEST_CASE("Hamilton product basis rules") {
  CHECK(dist(kE1 * kE2, kE3) == 0.0);
  CHECK(dist(kE2 * kE3, kE1) == 0.0);
  CHECK(dist(kE3 * kE1, kE2) == 0.0);
  for (const auto& e : {kE1, kE2, kE3}) CHECK(dist(e * e, -kOne) == 0.0);

  const std::array<Quaternion, 3> basis{kE1, kE2, kE3};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j)
      if (k != j) CHECK((basis[k] * basis[j] + basis[j] * basis[k]).norm() <= 1e-15);

  // (e1 e2) e3 = e3 e3 = -1 and e1 (e2 e3) = e1 e1 = -1
  CHECK(dist((kE1 * kE2) * kE3, -kOne) == 0.0);
  CHECK(dist(kE1 * (kE2 * kE3), -kOne) == 0.0);
}

TEST_CASE("product agrees with Pauli matrix products") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    CHECK(matdist(pauli_image(a * b), matmul(pauli_image(a), pauli_image(b))) <= 1e-13);
  }
}

TEST_CASE("identity, conjugate and norm multiplicativity") {
  std::mt19937_64 rng(2);
  CHECK(dist(conj(kE1), -kE1) == 0.0);
  CHECK(dist(conj(kOne), kOne) == 0.0);
  for (int i = 0; i < 200; ++i) {
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    CHECK(dist(kOne * a, a) == 0.0);
    CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) <= 1e-12 * (1.0 + a.norm() * b.norm()));
    const UnitQuaternion u = random_unit(rng);
    CHECK(dist(u.value() * conj(u.value()), kOne) <= 1e-12);
  }
}

TEST_CASE("UnitQuaternion renormalizes small drift and rejects large") {
  const UnitQuaternion q(1.0 + 5e-7, 0.0, 0.0, 0.0);
  CHECK(std::abs(q.value().norm() - 1.0) <= 1e-15);
  try {
    UnitQuaternion bad(1.1, 0.0, 0.0, 0.0);
    FAIL("expected NotUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnit);
  }
  CHECK_THROWS_AS(normalize(Quaternion{}), Error);
}

TEST_CASE("exp_pure") {
  CHECK(dist(exp_pure({0.0, kPi / 2.0, 0.0}).value(), kE2) <= 1e-16);
  CHECK(dist(exp_pure({}).value(), kOne) == 0.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> phi(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double p = phi(rng);
    // exp(phi e1) e2 = e2 exp(-phi e1)
    CHECK(dist(exp_pure({p, 0, 0}).value() * kE2, kE2 * exp_pure({-p, 0, 0}).value()) <= 1e-14);
    const ImagQuaternion v = random_imag(rng, 5.0);
    CHECK(dist((exp_pure(v) * exp_pure(-v)).value(), kOne) <= 1e-12);
  }

  SUBCASE("series branch is continuous at the 1e-8 threshold") {
    const ImagQuaternion dir{0.6, 0.0, 0.8};
    const Quaternion below = exp_pure(dir * (1e-8 * (1 - 1e-9))).value();
    const Quaternion above = exp_pure(dir * (1e-8 * (1 + 1e-9))).value();
    CHECK(dist(below, above) <= 1e-16);
    CHECK(below.x == doctest::Approx(0.6e-8).epsilon(1e-8));
  }
}

TEST_CASE("SU(2) correspondence") {
  const SU2Matrix id = to_su2(UnitQuaternion::identity());
  CHECK(id(0, 0) == std::complex<double>(1, 0));
  CHECK(id(1, 1) == std::complex<double>(1, 0));
  CHECK(id(0, 1) == std::complex<double>(0, 0));
  CHECK(id(1, 0) == std::complex<double>(0, 0));

  const SU2Matrix z = to_su2(UnitQuaternion(kE3));
  CHECK(z(0, 0) == std::complex<double>(0, -1));
  CHECK(z(1, 1) == std::complex<double>(0, 1));
  CHECK(std::abs(z(0, 1)) == 0.0);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const UnitQuaternion a = random_unit(rng), b = random_unit(rng);
    CHECK(dist(from_su2(to_su2(a)).value(), a.value()) <= 1e-12);
    CHECK(matdist(to_su2(a * b).a, (to_su2(a) * to_su2(b)).a) <= 1e-12);
    CHECK(matdist(to_su2(a).a, pauli_image(a)) <= 1e-15);
  }

  SUBCASE("rejects matrices outside SU(2)") {
    SU2Matrix scaled = to_su2(UnitQuaternion::identity());
    scaled(0, 0) *= 2.0;
    SU2Matrix reflection;  // unitary, det = -1
    reflection(0, 0) = 1.0;
    reflection(1, 1) = -1.0;
    for (const SU2Matrix& m : {scaled, reflection}) {
      try {
        (void)from_su2(m);
        FAIL("expected NotSpecialUnitary");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSpecialUnitary);
      }
    }
  }
}

TEST_CASE("rotate_vector") {
  const ImagQuaternion e1{1, 0, 0};
  CHECK(dist(rotate_vector(UnitQuaternion::identity(), e1), e1) == 0.0);
  CHECK(dist(rotate_vector(exp_pure({kPi / 4, 0, 0}), e1), e1) <= 1e-15);
  // conj(q) e1 q with q = (1 + e3)/sqrt(2) expands to -e2.
  CHECK(dist(rotate_vector(exp_pure({0, 0, kPi / 4}), e1), ImagQuaternion{0, -1, 0}) <= 1e-15);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const ImagQuaternion v = random_imag(rng);
    CHECK(std::abs(rotate_vector(random_unit(rng), v).norm() - v.norm()) <= 1e-14);
  }
}
