#include "spinlab/io.hpp"

#include <ostream>

#include "spinlab/errors.hpp"

namespace spinlab {

namespace {

std::string faces(const std::vector<Face>& fs) {
  std::string s;
  for (Face f : fs) s.push_back(to_char(f));
  return s;
}

}  // namespace

nlohmann::json box_to_json(const BehaviorBox& box) {
  nlohmann::json doc;
  doc["settings"] = {{"a", "a'"}, {"b", "b'"}};
  doc["outcomes"] = {1, -1};
  doc["p"] = box.entries();
  return doc;
}

BehaviorBox box_from_json(const nlohmann::json& doc) {
  const nlohmann::json expected_settings = {{"a", "a'"}, {"b", "b'"}};
  const nlohmann::json expected_outcomes = {1, -1};
  if (!doc.is_object()) throw DomainError("box document must be a JSON object");
  if (!doc.contains("settings") || doc["settings"] != expected_settings) {
    throw DomainError(R"(box "settings" must be [["a","a'"],["b","b'"]])");
  }
  if (!doc.contains("outcomes") || doc["outcomes"] != expected_outcomes) {
    throw DomainError(R"(box "outcomes" must be [1,-1])");
  }
  const auto it = doc.find("p");
  if (it == doc.end() || !it->is_array() || it->size() != 16) {
    throw DomainError(R"(box "p" must be an array of 16 numbers)");
  }
  BehaviorBox::Entries e{};
  for (std::size_t i = 0; i < 16; ++i) {
    if (!(*it)[i].is_number()) throw DomainError(R"(box "p" entries must be numbers)");
    e[i] = (*it)[i].get<double>();
  }
  return BehaviorBox(e);
}

std::string box_to_string(const BehaviorBox& box) { return box_to_json(box).dump(); }

BehaviorBox box_from_string(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("box JSON does not parse: ") + e.what());
  }
  return box_from_json(doc);
}

nlohmann::json game_record_to_json(const GameRecord& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["game"] = r.game;
  j["strategy"] = r.strategy;
  j["bob_bits"] = r.bob_bits;
  j["alice_bits"] = r.alice_bits;
  j["target_parity"] = to_string(r.target_parity);
  j["alice_flips"] = faces(r.alice_flips);
  j["bob_flips"] = faces(r.bob_flips);
  j["requested_lanes"] = r.requested_lanes;
  j["message_bits"] = r.message_bits;
  j["bits_bought"] = r.bits_bought;
  j["guess"] = to_string(r.guess);
  j["correct"] = r.correct();
  j["chips_start"] = r.chips_start;
  j["chips_net"] = r.chips_net;
  return j;
}

void write_game_records(std::ostream& out, const std::vector<GameRecord>& records) {
  for (const GameRecord& r : records) out << game_record_to_json(r).dump() << '\n';
}

}  // namespace spinlab
