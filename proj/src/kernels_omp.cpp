#include <cmath>
#include <numbers>

#include "spinlab/kernels.hpp"

namespace spinlab::kernels::omp {

std::uint64_t count_below(const CounterRng& rng, std::uint64_t stream, double p, std::uint64_t n) {
  std::uint64_t count = 0;
  const auto total = static_cast<long long>(n);
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (long long i = 0; i < total; ++i) {
    count += rng.uniform(stream, static_cast<std::uint64_t>(i)) < p ? 1 : 0;
  }
  return count;
}

std::array<std::uint64_t, 4> categorical_counts(const CounterRng& rng, std::uint64_t stream,
                                                const std::array<double, 4>& probs, std::uint64_t n) {
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  const auto total = static_cast<long long>(n);
#pragma omp parallel for reduction(+ : c0, c1, c2, c3) schedule(static)
  for (long long i = 0; i < total; ++i) {
    switch (detail::categorical_pick(rng.uniform(stream, static_cast<std::uint64_t>(i)), probs)) {
      case 0:
        ++c0;
        break;
      case 1:
        ++c1;
        break;
      case 2:
        ++c2;
        break;
      default:
        ++c3;
        break;
    }
  }
  return {c0, c1, c2, c3};
}

ChshScanResult chsh_scan(BellKind kind, Plane plane, int n) {
  ChshScanResult best;
  const double step = std::numbers::pi / n;
  const long long cells = static_cast<long long>(n) * n;
#pragma omp parallel
  {
    ChshScanResult local;
#pragma omp for schedule(static) nowait
    for (long long c = 0; c < cells; ++c) {
      const auto i = static_cast<int>(c / n);
      const auto j = static_cast<int>(c % n);
      const double v = detail::chsh_at(kind, plane, i * step, j * step);
      if (v > local.max_value) {
        local.max_value = v;
        local.best_alpha = i * step;
        local.best_beta = j * step;
      }
    }
#pragma omp critical(spinlab_chsh_scan)
    {
      // Ties resolve to the smallest (alpha, beta) so the result matches the
      // row-major serial scan.
      const bool better = local.max_value > best.max_value ||
                          (local.max_value == best.max_value && local.max_value > 0.0 &&
                           (local.best_alpha < best.best_alpha ||
                            (local.best_alpha == best.best_alpha && local.best_beta < best.best_beta)));
      if (better) best = local;
    }
  }
  best.points = static_cast<std::uint64_t>(cells);
  return best;
}

GameTally play_games(const Strategy& strategy, const GameConfig& config, std::uint64_t dealer_seed,
                     std::uint64_t mech_seed, std::uint64_t games) {
  std::uint64_t wins = 0;
  long long chips = 0;
  const auto total = static_cast<long long>(games);
#pragma omp parallel for reduction(+ : wins, chips) schedule(static)
  for (long long g = 0; g < total; ++g) {
    const auto game = static_cast<std::uint64_t>(g);
    const GameRecord r = play_deal(strategy, deal_game(config, dealer_seed, game), config, mech_seed, game);
    wins += r.correct() ? 1 : 0;
    chips += r.chips_net;
  }
  return {games, wins, chips};
}

ParityTheoremReport parity_theorem(const QuoinMechanics& mech, int lanes, int seeds) {
  ParityTheoremReport rep;
  rep.deals = std::uint64_t{1} << (2 * lanes);
  rep.seeds = static_cast<std::uint64_t>(seeds);
  std::uint64_t failures = 0;
  const auto deals = static_cast<long long>(rep.deals);
#pragma omp parallel for collapse(2) reduction(+ : failures) schedule(static)
  for (long long deal = 0; deal < deals; ++deal) {
    for (int s = 0; s < seeds; ++s) {
      failures += detail::parity_holds(mech, lanes, static_cast<std::uint64_t>(deal), s) ? 0 : 1;
    }
  }
  rep.failures = failures;
  rep.checks = rep.deals * rep.seeds;
  return rep;
}

}  // namespace spinlab::kernels::omp
