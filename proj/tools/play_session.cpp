#include "play_session.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace spinlab::cli {

namespace {

std::string bits_text(const std::vector<int>& bits) {
  std::string s;
  for (std::size_t i = 0; i < bits.size(); ++i) s += (i ? " " : "") + std::to_string(bits[i]);
  return s;
}

std::string faces_text(const std::vector<Face>& faces) {
  std::string s;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) s += ' ';
    s += to_char(faces[i]);
  }
  return s;
}

}  // namespace

PlaySession::PlaySession(Strategy strategy, GameConfig config, std::uint64_t dealer_seed,
                         std::uint64_t mech_seed)
    : strategy_(strategy), config_(config), mech_seed_(mech_seed),
      deal_(deal_game(config_, dealer_seed, 0)) {}

std::optional<GameRecord> PlaySession::run(std::istream& in, std::ostream& out) {
  // The automatic play fixes the flips and Bob's message; the human only
  // decides what to buy and what to guess.
  const GameRecord script = play_deal(strategy_, deal_, config_, mech_seed_, 0);

  GameRecord rec = script;
  rec.requested_lanes.clear();
  rec.message_bits.clear();
  rec.bits_bought = 0;

  out << "Strategy: " << strategy_.name() << ", " << config_.chips_start << " chips staked\n";
  out << "Your lanes:  " << bits_text(deal_.alice) << '\n';
  if (strategy_.kind == StrategyKind::quoin) {
    out << "Your quoins: " << faces_text(script.alice_flips) << '\n';
  }
  out << "Commands: " << (strategy_.kind == StrategyKind::quoin ? "message, " : "")
      << (strategy_.kind == StrategyKind::classical_bits ? "ask LANE, " : "") << "guess even|odd, quit\n";

  int bob_heads = 0;
  for (Face f : script.bob_flips) bob_heads += f == Face::heads ? 1 : 0;

  std::string line;
  while (out << "> " << std::flush, std::getline(in, line)) {
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    if (cmd.empty()) continue;
    if (cmd == "quit") return std::nullopt;
    if (cmd == "message" && strategy_.kind == StrategyKind::quoin) {
      if (!rec.message_bits.empty()) {
        out << "Bob already sent his bit: " << rec.message_bits.front() << '\n';
        continue;
      }
      rec.message_bits.push_back(bob_heads % 2);
      rec.bits_bought = 1;
      out << "Bob pays one chip and sends " << rec.message_bits.front() << " ("
          << (bob_heads % 2 ? "odd" : "even") << " number of H on his side)\n";
      continue;
    }
    if (cmd == "ask" && strategy_.kind == StrategyKind::classical_bits) {
      int lane = 0;
      if (!(words >> lane) || lane < 1 || lane > config_.lanes) {
        out << "ask needs a lane number 1.." << config_.lanes << '\n';
        continue;
      }
      if (rec.bits_bought >= strategy_.k) {
        out << "No more bits allowed (limit " << strategy_.k << ")\n";
        continue;
      }
      const int bit = deal_.bob[static_cast<std::size_t>(lane - 1)];
      rec.requested_lanes.push_back(lane);
      rec.message_bits.push_back(bit);
      ++rec.bits_bought;
      out << "Bob pays one chip: lane " << lane << " holds " << bit << '\n';
      continue;
    }
    if (cmd == "guess") {
      std::string p;
      words >> p;
      if (p != "even" && p != "odd") {
        out << "guess even or guess odd\n";
        continue;
      }
      rec.guess = p == "even" ? Parity::even : Parity::odd;
      rec.chips_net = chips_net(rec.chips_start, rec.bits_bought, rec.correct());
      out << "Bob's lanes: " << bits_text(deal_.bob) << '\n';
      if (!script.bob_flips.empty()) out << "Bob's quoins: " << faces_text(script.bob_flips) << '\n';
      out << "Answer: " << to_string(rec.target_parity) << " (" << deal_.double_one_lanes()
          << " lanes with two 1s). " << (rec.correct() ? "Correct" : "Wrong") << ", net chips "
          << (rec.chips_net > 0 ? "+" : "") << rec.chips_net << '\n';
      return rec;
    }
    out << "unknown command '" << cmd << "'\n";
  }
  return std::nullopt;
}

}  // namespace spinlab::cli
