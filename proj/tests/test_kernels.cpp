#include <gtest/gtest.h>

#include "spinlab/kernels.hpp"

using namespace spinlab;
namespace ser = spinlab::kernels::serial;
namespace par = spinlab::kernels::omp;

TEST(Kernels, CountBelowIdentical) {
  const CounterRng rng(123);
  for (double p : {0.0, 0.25, 0.5, 0.999, 1.0}) {
    EXPECT_EQ(ser::count_below(rng, 7, p, 50000), par::count_below(rng, 7, p, 50000));
  }
  EXPECT_EQ(ser::count_below(rng, 7, 1.0, 1000), 1000u);
}

TEST(Kernels, CategoricalCountsIdentical) {
  const CounterRng rng(5);
  const std::array<double, 4> probs{0.1, 0.4, 0.2, 0.3};
  const auto a = ser::categorical_counts(rng, 3, probs, 40000);
  EXPECT_EQ(a, par::categorical_counts(rng, 3, probs, 40000));
  EXPECT_EQ(a[0] + a[1] + a[2] + a[3], 40000u);
}

TEST(Kernels, CategoricalPickCoversSupport) {
  const std::array<double, 4> probs{0.0, 0.5, 0.0, 0.5};
  EXPECT_EQ(kernels::detail::categorical_pick(0.0, probs), 1);
  EXPECT_EQ(kernels::detail::categorical_pick(0.49, probs), 1);
  EXPECT_EQ(kernels::detail::categorical_pick(0.5, probs), 3);
  EXPECT_EQ(kernels::detail::categorical_pick(0.999999, probs), 3);
}

TEST(Kernels, ChshScanIdentical) {
  for (BellKind k : kAllBellKinds) {
    const Plane plane = symmetry_plane(k).value_or(Plane::xy);
    const ChshScanResult a = ser::chsh_scan(k, plane, 60);
    const ChshScanResult b = par::chsh_scan(k, plane, 60);
    EXPECT_EQ(a.max_value, b.max_value);
    EXPECT_EQ(a.best_alpha, b.best_alpha);
    EXPECT_EQ(a.best_beta, b.best_beta);
    EXPECT_EQ(a.points, b.points);
  }
}

TEST(Kernels, PlayGamesIdentical) {
  const GameConfig cfg;
  for (Strategy s : {Strategy::quoin(), Strategy::random(), Strategy::classical_bits(3)}) {
    const kernels::GameTally a = ser::play_games(s, cfg, 11, 12, 5000);
    const kernels::GameTally b = par::play_games(s, cfg, 11, 12, 5000);
    EXPECT_EQ(a.games, b.games);
    EXPECT_EQ(a.wins, b.wins);
    EXPECT_EQ(a.chips_net_sum, b.chips_net_sum);
  }
}

TEST(Kernels, ParityTheoremIdentical) {
  for (const QuoinMechanics& m : {QuoinMechanics::quoin(), QuoinMechanics::quantum_coin()}) {
    const ParityTheoremReport a = ser::parity_theorem(m, 5, 8);
    const ParityTheoremReport b = par::parity_theorem(m, 5, 8);
    EXPECT_EQ(a.checks, b.checks);
    EXPECT_EQ(a.failures, b.failures);
  }
}
