#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "spinlab/quoin.hpp"

namespace spinlab::cli {

/// One interactive game with a human as Alice.
///
/// Commands, one per line:
///   message      buy Bob's one-bit parity message (quoin strategy)
///   ask LANE     buy Bob's value in LANE, 1-based (classical:K, at most K)
///   guess even|odd
///   quit
class PlaySession {
 public:
  PlaySession(Strategy strategy, GameConfig config, std::uint64_t dealer_seed,
              std::uint64_t mech_seed);

  /// Returns the finished record, or nullopt if input ended or the player quit
  /// before guessing.
  std::optional<GameRecord> run(std::istream& in, std::ostream& out);

 private:
  Strategy strategy_;
  GameConfig config_;
  std::uint64_t mech_seed_;
  Deal deal_;
};

}  // namespace spinlab::cli
