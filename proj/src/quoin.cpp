#include "spinlab/quoin.hpp"

#include <charconv>
#include <cmath>

#include "spinlab/errors.hpp"
#include "spinlab/kernels.hpp"

namespace spinlab {

namespace {

constexpr std::uint64_t kDealStream = 0x4445;   // "DE"
constexpr std::uint64_t kGuessStream = 0x4755;  // "GU"
constexpr int kMaxRedeals = 1 << 20;

std::size_t start_index(FacePair p) {
  return (p.alice == Face::tails ? 2u : 0u) + (p.bob == Face::tails ? 1u : 0u);
}

Face face_for_bit(int bit) { return bit == 1 ? Face::heads : Face::tails; }

int heads(const std::vector<Face>& faces) {
  int n = 0;
  for (Face f : faces) n += f == Face::heads ? 1 : 0;
  return n;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

char to_char(Face f) { return f == Face::heads ? 'H' : 'T'; }

std::string to_string(FacePair p) { return {to_char(p.alice), to_char(p.bob)}; }

QuoinMechanics QuoinMechanics::quoin() {
  return {{Relation::unequal, Relation::equal, Relation::equal, Relation::equal}};
}

QuoinMechanics QuoinMechanics::quantum_coin() {
  return {{Relation::equal, Relation::equal, Relation::equal, Relation::equal}};
}

Relation QuoinMechanics::relation(FacePair start) const { return rule[start_index(start)]; }

FacePair flip_pair(const QuoinMechanics& mech, FacePair start, std::uint64_t seed,
                   std::uint64_t trial) {
  const bool first = (CounterRng(seed).bits(kQuoinStream, trial) >> 63) == 0;
  const Face a = first ? Face::heads : Face::tails;
  if (mech.relation(start) == Relation::equal) return {a, a};
  return {a, a == Face::heads ? Face::tails : Face::heads};
}

char to_char(Rigging r) {
  switch (r) {
    case Rigging::heads:
      return 'H';
    case Rigging::tails:
      return 'T';
    case Rigging::same:
      return 'S';
    case Rigging::other:
      return 'O';
  }
  return '?';
}

Face apply_rigging(Rigging r, Face start) {
  switch (r) {
    case Rigging::heads:
      return Face::heads;
    case Rigging::tails:
      return Face::tails;
    case Rigging::same:
      return start;
    case Rigging::other:
      return start == Face::heads ? Face::tails : Face::heads;
  }
  return start;
}

RiggingReport enumerate_riggings(const QuoinMechanics& mech) {
  RiggingReport report;
  for (Rigging ra : kAllRiggings) {
    for (Rigging rb : kAllRiggings) {
      RiggingFailure f{{ra, rb}, {}};
      for (FacePair start : kAllStarts) {
        const FacePair out{apply_rigging(ra, start.alice), apply_rigging(rb, start.bob)};
        const Relation need = mech.relation(start);
        if (out.equal() != (need == Relation::equal)) f.violations.push_back({start, out, need});
      }
      if (f.violations.empty()) {
        report.valid.push_back(f.rigging);
      } else {
        report.failures.push_back(std::move(f));
      }
    }
  }
  return report;
}

std::string describe(const RiggingViolation& v) {
  return "start " + to_string(v.start) + " -> " + to_string(v.outcome) + " (" +
         (v.outcome.equal() ? "equal" : "unequal") + "), table cell requires " +
         (v.required == Relation::equal ? "=" : "!=");
}

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

int Deal::double_one_lanes() const {
  int n = 0;
  for (std::size_t i = 0; i < alice.size(); ++i) n += (alice[i] == 1 && bob[i] == 1) ? 1 : 0;
  return n;
}

std::string Strategy::name() const {
  switch (kind) {
    case StrategyKind::quoin:
      return "quoin";
    case StrategyKind::classical_bits:
      return "classical:" + std::to_string(k);
    case StrategyKind::random:
      return "random";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  if (text == "quoin") return Strategy::quoin();
  if (text == "random") return Strategy::random();
  std::string_view digits;
  if (text.starts_with("classical:")) {
    digits = text.substr(10);
  } else if (text.starts_with("classical_bits(") && text.ends_with(")")) {
    digits = text.substr(15, text.size() - 16);
  } else {
    return std::nullopt;
  }
  if (const auto k = parse_int(digits)) return Strategy::classical_bits(*k);
  return std::nullopt;
}

int chips_net(int chips_start, int bits_bought, bool correct) {
  return correct ? chips_start - 2 * bits_bought : -chips_start;
}

Deal deal_game(const GameConfig& config, std::uint64_t dealer_seed, std::uint64_t game) {
  if (config.lanes < 1 || config.lanes > 30) throw DomainError("lane count must lie in [1, 30]");
  if (!(config.dealer_p_one >= 0.0 && config.dealer_p_one <= 1.0)) {
    throw DomainError("dealer probability must lie in [0, 1]");
  }
  if (config.alice_nonzero && config.dealer_p_one == 0.0) {
    throw DomainError("dealer cannot give Alice a 1 with probability 0");
  }
  const CounterRng rng(dealer_seed);
  const auto lanes = static_cast<std::uint64_t>(config.lanes);
  Deal d;
  d.bob.resize(lanes);
  d.alice.resize(lanes);
  for (std::uint64_t attempt = 0; attempt < kMaxRedeals; ++attempt) {
    const std::uint64_t base = (game * kMaxRedeals + attempt) * 2 * lanes;
    bool any = false;
    for (std::uint64_t i = 0; i < lanes; ++i) {
      d.bob[i] = rng.bernoulli(config.dealer_p_one, kDealStream, base + i) ? 1 : 0;
      d.alice[i] = rng.bernoulli(config.dealer_p_one, kDealStream, base + lanes + i) ? 1 : 0;
      any = any || d.alice[i] == 1;
    }
    if (any || !config.alice_nonzero) return d;
  }
  throw DomainError("dealer failed to give Alice a 1");
}

GameRecord play_deal(const Strategy& strategy, const Deal& deal, const GameConfig& config,
                     std::uint64_t mech_seed, std::uint64_t game) {
  const int lanes = config.lanes;
  if (deal.lanes() != lanes || static_cast<int>(deal.bob.size()) != lanes) {
    throw DomainError("deal lane count does not match the game config");
  }
  if (strategy.kind == StrategyKind::classical_bits && (strategy.k < 0 || strategy.k > lanes)) {
    throw DomainError("classical_bits(k) needs 0 <= k <= lanes");
  }

  GameRecord r;
  r.game = game;
  r.strategy = strategy.name();
  r.bob_bits = deal.bob;
  r.alice_bits = deal.alice;
  r.target_parity = deal.target();
  r.chips_start = config.chips_start;

  int alice_ones = 0;
  for (int b : deal.alice) alice_ones += b;

  switch (strategy.kind) {
    case StrategyKind::quoin: {
      for (int lane = 0; lane < lanes; ++lane) {
        const FacePair start{face_for_bit(deal.alice[lane]), face_for_bit(deal.bob[lane])};
        const auto trial = game * static_cast<std::uint64_t>(lanes) + static_cast<std::uint64_t>(lane);
        const FacePair out = flip_pair(config.mechanics, start, mech_seed, trial);
        r.alice_flips.push_back(out.alice);
        r.bob_flips.push_back(out.bob);
      }
      if (alice_ones == 0) {
        r.guess = Parity::even;
        break;
      }
      const int bob_bit = heads(r.bob_flips) % 2;
      r.message_bits.push_back(bob_bit);
      r.bits_bought = 1;
      r.guess = parity_of(heads(r.alice_flips) + bob_bit);
      break;
    }
    case StrategyKind::classical_bits: {
      int revealed_ones = 0;
      for (int lane = 0; lane < lanes && r.bits_bought < strategy.k; ++lane) {
        if (deal.alice[lane] != 1) continue;
        r.requested_lanes.push_back(lane + 1);
        r.message_bits.push_back(deal.bob[lane]);
        revealed_ones += deal.bob[lane];
        ++r.bits_bought;
      }
      const int unknown = alice_ones - r.bits_bought;
      // P(odd number of 1s among `unknown` Bob lanes) for i.i.d. lanes.
      const double q_odd =
          unknown == 0 ? 0.0 : 0.5 * (1.0 - std::pow(1.0 - 2.0 * config.dealer_p_one, unknown));
      const double p_odd = revealed_ones % 2 == 0 ? q_odd : 1.0 - q_odd;
      r.guess = p_odd > 0.5 + 1e-15 ? Parity::odd : Parity::even;
      break;
    }
    case StrategyKind::random: {
      if (alice_ones == 0) {
        r.guess = Parity::even;
      } else {
        const bool odd = CounterRng(mech_seed).bernoulli(0.5, kGuessStream, game);
        r.guess = odd ? Parity::odd : Parity::even;
      }
      break;
    }
  }
  r.chips_net = chips_net(r.chips_start, r.bits_bought, r.correct());
  return r;
}

GameRecord play_game(const Strategy& strategy, std::uint64_t dealer_seed, std::uint64_t mech_seed,
                     const GameConfig& config) {
  return play_deal(strategy, deal_game(config, dealer_seed, 0), config, mech_seed, 0);
}

std::uint64_t dealer_seed_for(std::uint64_t seed) { return CounterRng(seed).split(1).key(); }
std::uint64_t mech_seed_for(std::uint64_t seed) { return CounterRng(seed).split(2).key(); }

MonteCarloSummary monte_carlo(const Strategy& strategy, std::uint64_t games, std::uint64_t seed,
                              const GameConfig& config) {
  if (games == 0) throw DomainError("monte_carlo needs at least one game");
  const kernels::GameTally t =
      kernels::omp::play_games(strategy, config, dealer_seed_for(seed), mech_seed_for(seed), games);
  MonteCarloSummary s;
  s.games = t.games;
  s.wins = t.wins;
  const double n = static_cast<double>(t.games);
  s.win_rate = static_cast<double>(t.wins) / n;
  s.mean_chips_net = static_cast<double>(t.chips_net_sum) / n;
  s.ci_halfwidth = 3.0 * std::sqrt(s.win_rate * (1.0 - s.win_rate) / n);
  return s;
}

std::vector<GameRecord> simulate_records(const Strategy& strategy, std::uint64_t games,
                                         std::uint64_t seed, const GameConfig& config) {
  std::vector<GameRecord> out;
  out.reserve(games);
  const std::uint64_t ds = dealer_seed_for(seed);
  const std::uint64_t ms = mech_seed_for(seed);
  for (std::uint64_t g = 0; g < games; ++g) {
    out.push_back(play_deal(strategy, deal_game(config, ds, g), config, ms, g));
  }
  return out;
}

ParityTheoremReport verify_parity_theorem(const QuoinMechanics& mech, int lanes, int seeds) {
  if (lanes < 1 || lanes > 15) throw DomainError("parity theorem check supports 1..15 lanes");
  if (seeds < 1) throw DomainError("parity theorem check needs at least one seed");
  return kernels::omp::parity_theorem(mech, lanes, seeds);
}

}  // namespace spinlab
