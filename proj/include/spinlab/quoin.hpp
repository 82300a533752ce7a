#pragma once

// Quoins (coins with PR-box statistics), the rigging enumeration, and the
// five-lane parity guessing game.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinlab/rng.hpp"

namespace spinlab {

enum class Face { heads, tails };

char to_char(Face f);

/// Alice's face first, Bob's second.
struct FacePair {
  Face alice = Face::heads;
  Face bob = Face::heads;

  bool equal() const { return alice == bob; }
  friend bool operator==(FacePair, FacePair) = default;
};

inline constexpr std::array<FacePair, 4> kAllStarts{{{Face::heads, Face::heads},
                                                     {Face::heads, Face::tails},
                                                     {Face::tails, Face::heads},
                                                     {Face::tails, Face::tails}}};

std::string to_string(FacePair p);

enum class Relation { equal, unequal };

/// Outcome relation per start pair; the two outcome pairs allowed by the
/// relation are equally likely.
struct QuoinMechanics {
  std::array<Relation, 4> rule{};  // indexed like kAllStarts

  /// HH -> unequal, every other start -> equal.
  static QuoinMechanics quoin();
  /// Every start -> equal; the variant consistent with conservation.
  static QuoinMechanics quantum_coin();

  Relation relation(FacePair start) const;
};

inline constexpr std::uint64_t kQuoinStream = 0x514f;  // "QO"

/// Outcome of flipping one entangled pair; a pure function of (seed, trial).
FacePair flip_pair(const QuoinMechanics& mech, FacePair start, std::uint64_t seed,
                   std::uint64_t trial);

/// H: always heads, T: always tails, S: keeps its start face, O: turns over.
enum class Rigging { heads, tails, same, other };

inline constexpr std::array<Rigging, 4> kAllRiggings{Rigging::heads, Rigging::tails, Rigging::same,
                                                     Rigging::other};

char to_char(Rigging r);
Face apply_rigging(Rigging r, Face start);

struct RiggingPair {
  Rigging alice = Rigging::heads;
  Rigging bob = Rigging::heads;
};

struct RiggingViolation {
  FacePair start;
  FacePair outcome;
  Relation required = Relation::equal;
};

struct RiggingFailure {
  RiggingPair rigging;
  std::vector<RiggingViolation> violations;
};

struct RiggingReport {
  std::vector<RiggingPair> valid;
  std::vector<RiggingFailure> failures;
};

/// Checks all 16 rigging pairs against every start of `mech`.
RiggingReport enumerate_riggings(const QuoinMechanics& mech = QuoinMechanics::quoin());

std::string describe(const RiggingViolation& v);

// ---------------------------------------------------------------------------
// Guessing game
// ---------------------------------------------------------------------------

enum class Parity { even, odd };

std::string_view to_string(Parity p);
inline Parity parity_of(long long n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

struct Deal {
  std::vector<int> bob;
  std::vector<int> alice;

  int lanes() const { return static_cast<int>(alice.size()); }
  int double_one_lanes() const;
  Parity target() const { return parity_of(double_one_lanes()); }
};

enum class StrategyKind { quoin, classical_bits, random };

struct Strategy {
  StrategyKind kind = StrategyKind::quoin;
  int k = 0;  // lanes Alice may buy, classical_bits only

  static Strategy quoin() { return {StrategyKind::quoin, 0}; }
  static Strategy classical_bits(int k) { return {StrategyKind::classical_bits, k}; }
  static Strategy random() { return {StrategyKind::random, 0}; }

  std::string name() const;
};

/// Accepts "quoin", "random", "classical:K" and "classical_bits(K)".
std::optional<Strategy> parse_strategy(std::string_view text);

struct GameConfig {
  int lanes = 5;
  int chips_start = 6;
  QuoinMechanics mechanics = QuoinMechanics::quoin();
  /// Probability the dealer sets a lane to 1 (independently per lane).
  double dealer_p_one = 0.5;
  /// Redeal until Alice holds at least one 1.
  bool alice_nonzero = true;
};

struct GameRecord {
  std::uint64_t game = 0;
  std::string strategy;
  std::vector<int> bob_bits;
  std::vector<int> alice_bits;
  Parity target_parity = Parity::even;
  std::vector<Face> alice_flips;  // quoin strategy only
  std::vector<Face> bob_flips;
  std::vector<int> requested_lanes;  // 1-based lane numbers
  std::vector<int> message_bits;     // bits Bob sent, in order
  int bits_bought = 0;
  Parity guess = Parity::even;
  int chips_start = 6;
  int chips_net = 0;

  bool correct() const { return guess == target_parity; }
};

/// Net chips: a win pays (start - bought) on top of the purchase cost, so
/// start - 2 bought; a loss forfeits the whole stake.
int chips_net(int chips_start, int bits_bought, bool correct);

/// Deal number `game` from `dealer_seed`.
Deal deal_game(const GameConfig& config, std::uint64_t dealer_seed, std::uint64_t game);

/// Plays one fixed deal. Quoin flips and random guesses draw from
/// `mech_seed` at (game, lane). Throws DomainError for an invalid strategy
/// or a deal whose lane counts disagree with the config.
GameRecord play_deal(const Strategy& strategy, const Deal& deal, const GameConfig& config,
                     std::uint64_t mech_seed, std::uint64_t game = 0);

/// Deals game 0 from `dealer_seed` and plays it.
GameRecord play_game(const Strategy& strategy, std::uint64_t dealer_seed, std::uint64_t mech_seed,
                     const GameConfig& config = {});

struct MonteCarloSummary {
  std::uint64_t games = 0;
  std::uint64_t wins = 0;
  double win_rate = 0.0;
  double mean_chips_net = 0.0;
  double ci_halfwidth = 0.0;  // 3 sqrt(w (1 - w) / n)
};

/// Game i uses deal_game(dealer_seed(seed), i) and mech_seed(seed).
MonteCarloSummary monte_carlo(const Strategy& strategy, std::uint64_t games, std::uint64_t seed,
                              const GameConfig& config = {});

/// Full transcripts for the same games monte_carlo aggregates.
std::vector<GameRecord> simulate_records(const Strategy& strategy, std::uint64_t games,
                                         std::uint64_t seed, const GameConfig& config = {});

std::uint64_t dealer_seed_for(std::uint64_t seed);
std::uint64_t mech_seed_for(std::uint64_t seed);

struct ParityTheoremReport {
  std::uint64_t deals = 0;
  std::uint64_t seeds = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

/// For every deal of `lanes` lanes and each seed in [0, seeds): flips all
/// lanes with `mech` and checks that the combined heads count has the same
/// parity as the number of double-1 lanes.
ParityTheoremReport verify_parity_theorem(const QuoinMechanics& mech, int lanes, int seeds);

}  // namespace spinlab
