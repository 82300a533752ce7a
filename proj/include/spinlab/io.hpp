#pragma once

// JSON encodings for behavior boxes and game transcripts.
//
// Box:  {"settings": [["a","a'"],["b","b'"]], "outcomes": [1,-1],
//        "p": [16 numbers, row-major over (x, y, a, b)]}
// Game: one object per line, see docs/game_record.md.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinlab/boxes.hpp"
#include "spinlab/quoin.hpp"

namespace spinlab {

nlohmann::json box_to_json(const BehaviorBox& box);
/// Throws DomainError on a malformed document or an invalid box.
BehaviorBox box_from_json(const nlohmann::json& doc);

std::string box_to_string(const BehaviorBox& box);
BehaviorBox box_from_string(std::string_view text);

nlohmann::json game_record_to_json(const GameRecord& record);
/// Writes each record as compact JSON followed by '\n'.
void write_game_records(std::ostream& out, const std::vector<GameRecord>& records);

}  // namespace spinlab
