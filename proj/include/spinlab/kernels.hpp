#pragma once

// Data-parallel kernels. Each kernel has a serial reference in
// `kernels::serial` and an OpenMP implementation in `kernels::omp` with the
// same signature. Per-item randomness is a pure function of (seed, index), so
// both return bit-identical results; the tests hold them to that.

#include <array>
#include <cstdint>

#include "spinlab/bell.hpp"
#include "spinlab/boxes.hpp"
#include "spinlab/quoin.hpp"
#include "spinlab/rng.hpp"

namespace spinlab::kernels {

struct GameTally {
  std::uint64_t games = 0;
  std::uint64_t wins = 0;
  long long chips_net_sum = 0;
};

// count_below: trials i < n with rng.uniform(stream, i) < p.
// categorical_counts: inverse-CDF draw over four outcomes per trial.
namespace serial {
std::uint64_t count_below(const CounterRng& rng, std::uint64_t stream, double p, std::uint64_t n);
std::array<std::uint64_t, 4> categorical_counts(const CounterRng& rng, std::uint64_t stream,
                                                const std::array<double, 4>& probs, std::uint64_t n);
ChshScanResult chsh_scan(BellKind kind, Plane plane, int n);
GameTally play_games(const Strategy& strategy, const GameConfig& config, std::uint64_t dealer_seed,
                     std::uint64_t mech_seed, std::uint64_t games);
ParityTheoremReport parity_theorem(const QuoinMechanics& mech, int lanes, int seeds);
}  // namespace serial

namespace omp {
std::uint64_t count_below(const CounterRng& rng, std::uint64_t stream, double p, std::uint64_t n);
std::array<std::uint64_t, 4> categorical_counts(const CounterRng& rng, std::uint64_t stream,
                                                const std::array<double, 4>& probs, std::uint64_t n);
ChshScanResult chsh_scan(BellKind kind, Plane plane, int n);
GameTally play_games(const Strategy& strategy, const GameConfig& config, std::uint64_t dealer_seed,
                     std::uint64_t mech_seed, std::uint64_t games);
ParityTheoremReport parity_theorem(const QuoinMechanics& mech, int lanes, int seeds);
}  // namespace omp

/// Shared per-item helpers used by both implementations.
namespace detail {
int categorical_pick(double u, const std::array<double, 4>& probs);
double chsh_at(BellKind kind, Plane plane, double alpha, double beta);
bool parity_holds(const QuoinMechanics& mech, int lanes, std::uint64_t deal_mask, int seed);
}  // namespace detail

}  // namespace spinlab::kernels
