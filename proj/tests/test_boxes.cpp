#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spinlab/boxes.hpp"
#include "spinlab/errors.hpp"

using namespace spinlab;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

BehaviorBox singlet_box(double a0, double a1, double b0, double b1, Plane plane = Plane::xz) {
  return quantum_box(BellKind::singlet, {in_plane_direction(plane, a0), in_plane_direction(plane, a1)},
                     {in_plane_direction(plane, b0), in_plane_direction(plane, b1)});
}

// Independent CHSH: enumerate all four placements of the single minus sign.
double chsh_oracle(const BehaviorBox& box) {
  double best = 0.0;
  for (int nx = 0; nx < 2; ++nx) {
    for (int ny = 0; ny < 2; ++ny) {
      double s = 0.0;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          double e = 0.0;
          for (int a : {1, -1})
            for (int b : {1, -1}) e += a * b * box.p(x, y, a, b);
          s += (x == nx && y == ny ? -1.0 : 1.0) * e;
        }
      best = std::max(best, std::abs(s));
    }
  }
  return best;
}

}  // namespace

TEST(BehaviorBox, ValidatesEntries) {
  BehaviorBox::Entries e{};
  EXPECT_THROW(BehaviorBox{e}, DomainError);
  e = BehaviorBox::uniform().entries();
  e[0] = -0.25;
  e[1] = 0.75;
  EXPECT_THROW(BehaviorBox{e}, DomainError);
  e = BehaviorBox::uniform().entries();
  e[5] = 0.3;
  EXPECT_THROW(BehaviorBox{e}, DomainError);
}

TEST(NoSignalling, PrBoxHasUniformMarginals) {
  const BehaviorBox pr = pr_box();
  const NoSignallingReport r = no_signalling_check(pr);
  EXPECT_TRUE(r.no_signalling);
  EXPECT_EQ(r.max_deviation, 0.0);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      EXPECT_EQ(pr.alice_plus(x, y), 0.5);
      EXPECT_EQ(pr.bob_plus(x, y), 0.5);
    }
}

TEST(NoSignalling, QuantumBoxesPass) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    for (BellKind k : kAllBellKinds) {
      const BehaviorBox box = quantum_box(
          k, {in_plane_direction(Plane::xz, ang(rng)), in_plane_direction(Plane::xy, ang(rng))},
          {in_plane_direction(Plane::yz, ang(rng)), in_plane_direction(Plane::xz, ang(rng))});
      EXPECT_TRUE(no_signalling_check(box).no_signalling);
    }
  }
}

TEST(NoSignalling, SignallingBoxDetected) {
  BehaviorBox::Entries e{};
  e[BehaviorBox::index(0, 0, 0, 0)] = 1.0;  // (+1,+1) at (a,b)
  e[BehaviorBox::index(0, 1, 1, 1)] = 1.0;  // (-1,-1) at (a,b')
  e[BehaviorBox::index(1, 0, 0, 0)] = 1.0;
  e[BehaviorBox::index(1, 1, 0, 0)] = 1.0;
  const NoSignallingReport r = no_signalling_check(BehaviorBox(e));
  EXPECT_FALSE(r.no_signalling);
  EXPECT_FALSE(r.violations.empty());
  EXPECT_EQ(r.max_deviation, 1.0);
}

TEST(Chsh, Examples) {
  const ChshResult pr = chsh_value(pr_box());
  EXPECT_EQ(pr.value, 4.0);
  EXPECT_EQ(pr.negative_x, 1);
  EXPECT_EQ(pr.negative_y, 1);
  EXPECT_EQ(chsh_value(BehaviorBox::uniform()).value, 0.0);
  EXPECT_NEAR(chsh_value(singlet_box(0, M_PI / 2, M_PI / 4, 3 * M_PI / 4)).value, kTsirelson, 1e-9);
}

TEST(Chsh, MatchesIndependentEvaluation) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int trial = 0; trial < 500; ++trial) {
    const BehaviorBox box = singlet_box(ang(rng), ang(rng), ang(rng), ang(rng));
    EXPECT_NEAR(chsh_value(box).value, chsh_oracle(box), kExactTol);
  }
}

TEST(Chsh, NeverExceedsTsirelsonOnDenseGrid) {
  const int n = 24;
  for (BellKind k : kAllBellKinds) {
    const Plane plane = symmetry_plane(k).value_or(Plane::xz);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; l += 3)
          for (int m = 0; m < n; m += 3) {
            const double s = 2 * M_PI / n;
            const BehaviorBox box = quantum_box(
                k, {in_plane_direction(plane, i * s), in_plane_direction(plane, j * s)},
                {in_plane_direction(plane, l * s), in_plane_direction(plane, m * s)});
            ASSERT_LE(chsh_value(box).value, kTsirelson + 1e-9);
          }
  }
}

TEST(Lhv, MaximumIsTwo) {
  const LhvResult r = lhv_max_chsh();
  EXPECT_EQ(r.value, 2.0);
  EXPECT_EQ(r.strategies_checked, 16);
  EXPECT_EQ(r.maximizing_count, 16);
  const BehaviorBox all_plus = BehaviorBox::deterministic({1, 1}, {1, 1});
  EXPECT_EQ(chsh_value(all_plus).value, 2.0);
}

TEST(Lhv, DeterministicBoxesAreConsistentAndBounded) {
  for (int m = 0; m < 16; ++m) {
    const BehaviorBox box = BehaviorBox::deterministic({m & 1 ? -1 : 1, m & 2 ? -1 : 1},
                                                       {m & 4 ? -1 : 1, m & 8 ? -1 : 1});
    EXPECT_LE(chsh_value(box).value, 2.0);
    EXPECT_EQ(conservation_filter(box).status, ConservationStatus::consistent);
    EXPECT_TRUE(no_signalling_check(box).no_signalling);
  }
}

TEST(PrBox, Entries) {
  const BehaviorBox pr = pr_box();
  EXPECT_EQ(pr.p(0, 0, 1, 1), 0.5);
  EXPECT_EQ(pr.p(0, 0, 1, -1), 0.0);
  EXPECT_EQ(pr.p(1, 1, 1, 1), 0.0);
  EXPECT_EQ(pr.p(1, 1, 1, -1), 0.5);
  EXPECT_EQ(pr.correlator(1, 1), -1.0);
}

TEST(ConservationFilter, PrBoxIsInconsistent) {
  const ConservationVerdict v = conservation_filter(pr_box());
  EXPECT_EQ(v.status, ConservationStatus::inconsistent);
  ASSERT_EQ(v.trace.size(), 5u);
  EXPECT_EQ(v.trace[3], "a = b, a = b', a' = b => a' = b'");
  EXPECT_NE(v.trace[4].find("contradiction"), std::string::npos);
}

TEST(ConservationFilter, ConsistentExamples) {
  EXPECT_EQ(conservation_filter(BehaviorBox::from_correlator_signs({{{1, 1}, {1, 1}}})).status,
            ConservationStatus::consistent);
  EXPECT_EQ(conservation_filter(BehaviorBox::from_correlator_signs({{{1, 1}, {-1, -1}}})).status,
            ConservationStatus::consistent);
  EXPECT_EQ(conservation_filter(BehaviorBox::uniform()).status, ConservationStatus::not_applicable);
}

TEST(ConservationFilter, OddMinusCountIsExactlyTheInconsistentSet) {
  for (int m = 0; m < 16; ++m) {
    const std::array<std::array<int, 2>, 2> s{{{m & 1 ? -1 : 1, m & 2 ? -1 : 1},
                                               {m & 4 ? -1 : 1, m & 8 ? -1 : 1}}};
    const int minus = __builtin_popcount(static_cast<unsigned>(m));
    const BehaviorBox box = BehaviorBox::from_correlator_signs(s);
    EXPECT_EQ(conservation_filter(box).status, minus % 2 == 1 ? ConservationStatus::inconsistent
                                                              : ConservationStatus::consistent);
    EXPECT_EQ(chsh_value(box).value, minus % 2 == 1 ? 4.0 : 2.0);
  }
}

TEST(SignFamily, PrBoxUniqueUpToRelabeling) {
  const auto family = correlator_sign_family();
  ASSERT_EQ(family.size(), 16u);
  int chsh4 = 0;
  for (const BehaviorBox& box : family) {
    EXPECT_TRUE(no_signalling_check(box).no_signalling);
    if (chsh_value(box).value == 4.0) {
      ++chsh4;
      EXPECT_TRUE(is_relabeling_of(box, pr_box()));
    } else {
      EXPECT_FALSE(is_relabeling_of(box, pr_box()));
    }
  }
  EXPECT_EQ(chsh4, 8);
}

TEST(TsirelsonScan, ReachesBoundOnGrid) {
  const ChshScanResult r = tsirelson_scan(BellKind::singlet, Plane::xz, 180);
  EXPECT_EQ(r.points, 180u * 180u);
  EXPECT_LE(r.max_value, kTsirelson + 1e-9);
  EXPECT_NEAR(r.max_value, kTsirelson, 1e-9);
  for (BellKind k : {BellKind::psi_plus, BellKind::phi_minus, BellKind::phi_plus}) {
    const ChshScanResult t = tsirelson_scan(k, *symmetry_plane(k), 36);
    EXPECT_NEAR(t.max_value, kTsirelson, 1e-9);
  }
}
