#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "spinlab/errors.hpp"
#include "spinlab/qubit.hpp"

using namespace spinlab;

namespace {

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return normalized({g(rng), g(rng), g(rng)});
}

Vec3 random_ball(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(0.0, 1.0);
  const Vec3 u = random_unit(rng);
  const double s = std::cbrt(r(rng));
  return {s * u.x, s * u.y, s * u.z};
}

}  // namespace

TEST(BlochRoundtrip, SpinUpIsPurePole) {
  const QubitState s = QubitState::from_density(ComplexMatrix::diagonal({1.0, 0.0}));
  EXPECT_LE(max_abs_diff(s.bloch(), Vec3{0, 0, 1}), kExactTol);
  EXPECT_TRUE(s.is_pure());
  EXPECT_FALSE(s.is_maximally_mixed());
}

TEST(BlochRoundtrip, HalfIdentityIsMaximallyMixed) {
  const QubitState s = QubitState::from_density(0.5 * pauli_identity());
  EXPECT_LE(norm(s.bloch()), kExactTol);
  EXPECT_TRUE(s.is_maximally_mixed());
  EXPECT_FALSE(s.is_pure());
}

TEST(BlochRoundtrip, TiltedPureState) {
  const double h = 1.0 / std::sqrt(2.0);
  const QubitState s = QubitState::from_bloch({h, 0.0, h});
  const ComplexMatrix expected = 0.5 * (pauli_identity() + h * (pauli_x() + pauli_z()));
  EXPECT_LE(max_abs_diff(s.rho(), expected), kExactTol);
  EXPECT_TRUE(s.is_pure());
  const auto ev = hermitian_eigenvalues(s.rho());
  EXPECT_NEAR(ev[0], 0.0, kExactTol);
  EXPECT_NEAR(ev[1], 1.0, kExactTol);
}

TEST(BlochRoundtrip, RandomStatesReproduceDensity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const QubitState s = QubitState::from_bloch(random_ball(rng));
    const QubitState back = bloch_roundtrip(s);
    EXPECT_LE(max_abs_diff(back.rho(), s.rho()), kExactTol);
    EXPECT_LE(max_abs_diff(oracle::bloch_of(oracle::to_eigen(s.rho())), s.bloch()), kExactTol);
  }
}

TEST(QubitState, InvalidInputs) {
  EXPECT_THROW(QubitState::from_density(ComplexMatrix::diagonal({1.0, 1.0})), InvalidStateError);
  EXPECT_THROW(QubitState::from_density(ComplexMatrix::diagonal({1.5, -0.5})), InvalidStateError);
  EXPECT_THROW(QubitState::from_density(ComplexMatrix(2, {0.5, 0.5, 0.0, 0.5})), InvalidStateError);
  EXPECT_THROW(QubitState::from_density(ComplexMatrix::identity(3)), InvalidStateError);
  EXPECT_THROW(QubitState::from_bloch({1.0, 1.0, 0.0}), InvalidStateError);
  EXPECT_THROW(QubitState::from_bloch({NAN, 0.0, 0.0}), InvalidStateError);
}

TEST(Su2Rotate, PoleAboutXByQuarterPiLandsOnEquator) {
  const QubitState r = su2_rotate(QubitState::spin_up(), Axis::x, M_PI / 4);
  EXPECT_NEAR(r.bloch().z, 0.0, kExactTol);
  // exp(i pi/4 sigma_x) turns +z to +y: a -90 deg turn about x.
  EXPECT_LE(max_abs_diff(r.bloch(), Vec3{0, 1, 0}), kExactTol);
}

TEST(Su2Rotate, ZeroAngleAndAxisFixedPoint) {
  const QubitState s = QubitState::from_bloch({0.3, -0.2, 0.5});
  EXPECT_LE(max_abs_diff(su2_rotate(s, Axis::y, 0.0).rho(), s.rho()), kExactTol);
  for (double t : {0.1, 1.0, 2.5, -4.0}) {
    EXPECT_LE(max_abs_diff(su2_rotate(QubitState::spin_up(), Axis::z, t).bloch(), Vec3{0, 0, 1}),
              kExactTol);
  }
}

TEST(Su2Rotate, MatchesExponentialOracle) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    const QubitState s = QubitState::from_bloch(random_ball(rng));
    const Vec3 n = random_unit(rng);
    const double t = ang(rng);
    const oracle::Mat u = oracle::su2(n, t);
    const oracle::Mat rho = u * oracle::to_eigen(s.rho()) * u.adjoint();
    EXPECT_LE(max_abs_diff(su2_rotate(s, n, t).bloch(), oracle::bloch_of(rho)), 1e-12);
  }
}

TEST(Su2Rotate, PreservesBlochLength) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const QubitState s = QubitState::from_bloch(random_ball(rng));
    const QubitState r = su2_rotate(s, random_unit(rng), ang(rng));
    EXPECT_NEAR(r.bloch_length(), s.bloch_length(), kExactTol);
  }
}

TEST(Su2Rotate, HomomorphismOntoSo3) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    const QubitState s = QubitState::from_bloch(random_ball(rng));
    const Vec3 n1 = random_unit(rng), n2 = random_unit(rng);
    const double t1 = ang(rng), t2 = ang(rng);
    const QubitState via_su2 = su2_rotate(su2_rotate(s, n1, t1), n2, t2);
    const Rotation3 r = bloch_rotation(n1, t1).then(bloch_rotation(n2, t2));
    EXPECT_LE(max_abs_diff(via_su2.bloch(), r.apply(s.bloch())), 1e-9);
  }
}

TEST(Su2Rotate, RejectsBadArguments) {
  EXPECT_THROW(su2_rotate(QubitState::spin_up(), Vec3{0, 0, 2}, 0.1), DomainError);
  EXPECT_THROW(su2_rotate(QubitState::spin_up(), Axis::x, INFINITY), DomainError);
}

TEST(GbitDimension, Values) {
  EXPECT_EQ(gbit_dimension(1), 1u);
  EXPECT_EQ(gbit_dimension(2), 3u);
  EXPECT_EQ(gbit_dimension(4), 15u);
  EXPECT_THROW(gbit_dimension(0), DomainError);
  EXPECT_THROW(gbit_dimension(-3), DomainError);
}

TEST(ClassicalPurePath, ZeroToOneInThreeSteps) {
  const auto path = classical_pure_path(ClassicalBitState(0.0), ClassicalBitState(1.0), 3);
  ASSERT_EQ(path.size(), 5u);
  EXPECT_EQ(path.front().p1(), 0.0);
  EXPECT_EQ(path.back().p1(), 1.0);
  const double want[] = {0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(path[i + 1].p1(), want[i], kExactTol);
    EXPECT_FALSE(path[i + 1].is_pure());
  }
}

TEST(ClassicalPurePath, OneToZeroInOneStep) {
  const auto path = classical_pure_path(ClassicalBitState(1.0), ClassicalBitState(0.0), 1);
  ASSERT_EQ(path.size(), 3u);
  EXPECT_NEAR(path[1].p1(), 0.5, kExactTol);
  EXPECT_FALSE(path[1].is_pure());
}

TEST(ClassicalPurePath, Errors) {
  EXPECT_THROW(classical_pure_path(ClassicalBitState(0.5), ClassicalBitState(1.0), 2), DomainError);
  EXPECT_THROW(classical_pure_path(ClassicalBitState(1.0), ClassicalBitState(1.0), 2), DomainError);
  EXPECT_THROW(ClassicalBitState(1.5), DomainError);
}

TEST(ClassicalPurePath, EveryInteriorPointIsMixed) {
  for (int steps = 1; steps <= 50; ++steps) {
    const auto path = classical_pure_path(ClassicalBitState(0.0), ClassicalBitState(1.0), steps);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) EXPECT_FALSE(path[i].is_pure());
  }
}

TEST(RotationPath, QubitPathStaysOnSphere) {
  // Theta = pi/2 in Hilbert space is a half turn in real space: +z to -z.
  const auto path = rotation_path(QubitState::spin_up(), Axis::x, M_PI / 2, 10);
  ASSERT_EQ(path.size(), 11u);
  for (const auto& s : path) EXPECT_TRUE(s.is_pure());
  EXPECT_LE(max_abs_diff(path.back().bloch(), Vec3{0, 0, -1}), kExactTol);
}

TEST(RotationPath, RandomPurePairsConnectOnSphere) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 from = random_unit(rng), to = random_unit(rng);
    const Vec3 c = cross(from, to);
    if (norm(c) < 1e-6) continue;
    const double real_angle = std::acos(std::clamp(dot(from, to), -1.0, 1.0));
    // -2 Theta about c takes `from` to `to` when Theta = -angle/2.
    const QubitState start = QubitState::from_bloch(from);
    const Vec3 axis = normalized(c);
    for (int k = 0; k <= 20; ++k) {
      const QubitState s = su2_rotate(start, axis, -0.5 * real_angle * k / 20.0);
      EXPECT_TRUE(s.is_pure(1e-12));
      if (k == 20) {
        EXPECT_LE(max_abs_diff(s.bloch(), to), 1e-12);
      }
    }
  }
}
