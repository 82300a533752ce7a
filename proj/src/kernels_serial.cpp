#include <cmath>
#include <numbers>

#include "spinlab/kernels.hpp"

namespace spinlab::kernels {

namespace detail {

int categorical_pick(double u, const std::array<double, 4>& probs) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  return 3;
}

double chsh_at(BellKind kind, Plane plane, double alpha, double beta) {
  const std::array<Vec3, 2> alice{in_plane_direction(plane, 0.0), in_plane_direction(plane, alpha)};
  const std::array<Vec3, 2> bob{in_plane_direction(plane, beta),
                                in_plane_direction(plane, alpha + beta)};
  std::array<std::array<double, 2>, 2> e{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) e[x][y] = joint_probabilities(kind, alice[x], bob[y]).correlator();
  return chsh_from_correlators(e).value;
}

bool parity_holds(const QuoinMechanics& mech, int lanes, std::uint64_t deal_mask, int seed) {
  int heads = 0;
  int double_ones = 0;
  for (int lane = 0; lane < lanes; ++lane) {
    const bool alice_one = (deal_mask >> lane) & 1u;
    const bool bob_one = (deal_mask >> (lanes + lane)) & 1u;
    double_ones += (alice_one && bob_one) ? 1 : 0;
    const FacePair start{alice_one ? Face::heads : Face::tails, bob_one ? Face::heads : Face::tails};
    const auto trial = deal_mask * static_cast<std::uint64_t>(lanes) + static_cast<std::uint64_t>(lane);
    const FacePair out = flip_pair(mech, start, static_cast<std::uint64_t>(seed), trial);
    heads += (out.alice == Face::heads ? 1 : 0) + (out.bob == Face::heads ? 1 : 0);
  }
  return heads % 2 == double_ones % 2;
}

}  // namespace detail

namespace serial {

std::uint64_t count_below(const CounterRng& rng, std::uint64_t stream, double p, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) count += rng.uniform(stream, i) < p ? 1 : 0;
  return count;
}

std::array<std::uint64_t, 4> categorical_counts(const CounterRng& rng, std::uint64_t stream,
                                                const std::array<double, 4>& probs, std::uint64_t n) {
  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t i = 0; i < n; ++i) ++counts[detail::categorical_pick(rng.uniform(stream, i), probs)];
  return counts;
}

ChshScanResult chsh_scan(BellKind kind, Plane plane, int n) {
  ChshScanResult best;
  const double step = std::numbers::pi / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = detail::chsh_at(kind, plane, i * step, j * step);
      if (v > best.max_value) {
        best.max_value = v;
        best.best_alpha = i * step;
        best.best_beta = j * step;
      }
    }
  }
  best.points = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return best;
}

GameTally play_games(const Strategy& strategy, const GameConfig& config, std::uint64_t dealer_seed,
                     std::uint64_t mech_seed, std::uint64_t games) {
  GameTally t;
  for (std::uint64_t g = 0; g < games; ++g) {
    const GameRecord r = play_deal(strategy, deal_game(config, dealer_seed, g), config, mech_seed, g);
    t.wins += r.correct() ? 1 : 0;
    t.chips_net_sum += r.chips_net;
  }
  t.games = games;
  return t;
}

ParityTheoremReport parity_theorem(const QuoinMechanics& mech, int lanes, int seeds) {
  ParityTheoremReport rep;
  rep.deals = std::uint64_t{1} << (2 * lanes);
  rep.seeds = static_cast<std::uint64_t>(seeds);
  for (std::uint64_t deal = 0; deal < rep.deals; ++deal) {
    for (int s = 0; s < seeds; ++s) {
      rep.failures += detail::parity_holds(mech, lanes, deal, s) ? 0 : 1;
    }
  }
  rep.checks = rep.deals * rep.seeds;
  return rep;
}

}  // namespace serial

}  // namespace spinlab::kernels
