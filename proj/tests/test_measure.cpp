#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spinlab/errors.hpp"
#include "spinlab/hilbert.hpp"
#include "spinlab/measure.hpp"

using namespace spinlab;

namespace {

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return normalized({g(rng), g(rng), g(rng)});
}

}  // namespace

TEST(ProjectionProbabilities, Examples) {
  auto p = projection_probabilities(SGSetup::in_xz_plane(0.0));
  EXPECT_EQ(p.p_plus, 1.0);
  EXPECT_EQ(p.p_minus, 0.0);

  p = projection_probabilities(SGSetup::in_xz_plane(M_PI / 2));
  EXPECT_NEAR(p.p_plus, 0.5, kExactTol);
  EXPECT_NEAR(p.p_minus, 0.5, kExactTol);

  p = projection_probabilities(SGSetup::in_xz_plane(2 * M_PI / 3));
  EXPECT_NEAR(p.p_plus, 0.25, kExactTol);
  EXPECT_NEAR(p.p_minus, 0.75, kExactTol);
}

TEST(ProjectionProbabilities, NonUnitDirectionsRejected) {
  EXPECT_THROW(SGSetup({0, 0, 2}, {0, 0, 1}), DomainError);
  EXPECT_THROW(SGSetup({0, 0, 1}, {0.5, 0, 0}), DomainError);
}

TEST(ExpectedOutcome, Examples) {
  EXPECT_NEAR(expected_outcome(SGSetup::in_xz_plane(0.0)), 1.0, kExactTol);
  EXPECT_NEAR(expected_outcome(SGSetup::in_xz_plane(M_PI)), -1.0, kExactTol);
  EXPECT_NEAR(expected_outcome(SGSetup::in_xz_plane(M_PI / 3)), 0.5, kExactTol);
}

TEST(ExpectedOutcome, AverageIdentityOnGrid) {
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const double theta = M_PI * k / (n - 1);
    const SGSetup s = SGSetup::in_xz_plane(theta);
    const auto p = projection_probabilities(s);
    EXPECT_NEAR(p.p_plus, std::pow(std::cos(theta / 2), 2), kExactTol);
    EXPECT_NEAR(p.p_plus - p.p_minus, std::cos(theta), kExactTol);
    EXPECT_NEAR(classical_projection(s), std::cos(theta), kExactTol);
  }
}

TEST(ProjectionProbabilities, DependOnlyOnRelativeAngle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec3 prep = random_unit(rng), meas = random_unit(rng);
    const Rotation3 r = so3_rotation(random_unit(rng), ang(rng));
    const auto p0 = projection_probabilities(SGSetup(prep, meas));
    const auto p1 = projection_probabilities(SGSetup(r.apply(prep), r.apply(meas)));
    EXPECT_NEAR(p0.p_plus, p1.p_plus, kExactTol);
  }
}

TEST(SampleOutcomes, DeterministicAtZero) {
  const auto s = sample_outcomes(SGSetup::in_xz_plane(0.0), 1000, 5);
  EXPECT_EQ(s.n_plus, 1000u);
  EXPECT_EQ(s.n_minus, 0u);
  const auto t = sample_outcomes(SGSetup::in_xz_plane(M_PI), 1000, 5);
  EXPECT_EQ(t.n_plus, 0u);
}

TEST(SampleOutcomes, WithinBinomialBand) {
  const std::uint64_t n = 100000;
  for (double theta : {M_PI / 2, 2 * M_PI / 3, M_PI / 5}) {
    const SGSetup setup = SGSetup::in_xz_plane(theta);
    const auto s = sample_outcomes(setup, n, 99);
    const double p = projection_probabilities(setup).p_plus;
    EXPECT_EQ(s.n_plus + s.n_minus, s.n);
    EXPECT_LE(std::abs(s.fraction_plus() - p), 3.0 * std::sqrt(p * (1 - p) / n));
    EXPECT_NEAR(binomial_band(p, n), 3.0 * std::sqrt(p * (1 - p) / n), 1e-15);
  }
}

TEST(SampleOutcomes, ReproducibleAndMatchesSingleDraws) {
  const SGSetup setup = SGSetup::in_xz_plane(1.1);
  const auto a = sample_outcomes(setup, 5000, 123);
  const auto b = sample_outcomes(setup, 5000, 123);
  EXPECT_EQ(a.n_plus, b.n_plus);
  EXPECT_EQ(a.seed, 123u);

  std::uint64_t plus = 0;
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const int o = sample_single(setup, 123, i);
    ASSERT_TRUE(o == 1 || o == -1);
    plus += o == 1 ? 1 : 0;
  }
  EXPECT_EQ(plus, a.n_plus);
}

TEST(SampleOutcomes, ZeroTrialsRejected) {
  EXPECT_THROW(sample_outcomes(SGSetup::in_xz_plane(0.3), 0, 1), DomainError);
}
