// Serial reference vs OpenMP kernels on the workloads the acceptance suite
// runs. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "spinlab/kernels.hpp"

using namespace spinlab;
namespace ser = spinlab::kernels::serial;
namespace par = spinlab::kernels::omp;

namespace {

template <class F>
void count_below(benchmark::State& state, F f) {
  const CounterRng rng(7);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f(rng, 1, 0.25, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <class F>
void categorical(benchmark::State& state, F f) {
  const CounterRng rng(7);
  const std::array<double, 4> probs{0.375, 0.125, 0.125, 0.375};
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f(rng, 2, probs, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <class F>
void chsh_scan(benchmark::State& state, F f) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f(BellKind::singlet, Plane::xz, n));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <class F>
void play_games(benchmark::State& state, F f) {
  const GameConfig cfg;
  const auto games = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f(Strategy::quoin(), cfg, 1, 2, games));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <class F>
void parity(benchmark::State& state, F f) {
  const int seeds = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f(QuoinMechanics::quoin(), 5, seeds));
  state.SetItemsProcessed(state.iterations() * 1024 * state.range(0));
}

void BM_CountBelow_Serial(benchmark::State& s) { count_below(s, ser::count_below); }
void BM_CountBelow_Omp(benchmark::State& s) { count_below(s, par::count_below); }
void BM_Categorical_Serial(benchmark::State& s) { categorical(s, ser::categorical_counts); }
void BM_Categorical_Omp(benchmark::State& s) { categorical(s, par::categorical_counts); }
void BM_ChshScan_Serial(benchmark::State& s) { chsh_scan(s, ser::chsh_scan); }
void BM_ChshScan_Omp(benchmark::State& s) { chsh_scan(s, par::chsh_scan); }
void BM_PlayGames_Serial(benchmark::State& s) { play_games(s, ser::play_games); }
void BM_PlayGames_Omp(benchmark::State& s) { play_games(s, par::play_games); }
void BM_Parity_Serial(benchmark::State& s) { parity(s, ser::parity_theorem); }
void BM_Parity_Omp(benchmark::State& s) { parity(s, par::parity_theorem); }

}  // namespace

BENCHMARK(BM_CountBelow_Serial)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_CountBelow_Omp)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_Categorical_Serial)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_Categorical_Omp)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_ChshScan_Serial)->Arg(90)->Arg(180);
BENCHMARK(BM_ChshScan_Omp)->Arg(90)->Arg(180);
BENCHMARK(BM_PlayGames_Serial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_PlayGames_Omp)->Arg(10000)->Arg(100000);
BENCHMARK(BM_Parity_Serial)->Arg(32);
BENCHMARK(BM_Parity_Omp)->Arg(32);

BENCHMARK_MAIN();
