#ifndef TAXMAN_SERIALIZATION_HPP
#define TAXMAN_SERIALIZATION_HPP

#include <filesystem>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "taxman/bounds.hpp"
#include "taxman/game.hpp"

namespace taxman {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replay record: {"n": N, "picks": [...]} plus optional score fields,
/// which are ignored on input.
struct GameRecord {
  int n = 0;
  std::vector<Element> picks;
};

nlohmann::json to_json(const Move& move);

/// {"n", "picks", "player_score", "taxman_score"}.
nlohmann::json to_json(const GameState& state);

/// Record fields plus "in_play", "legal_picks", "history", "game_over" and
/// "outcome" (null until the game is over).
nlohmann::json state_payload(const GameState& state);

nlohmann::json to_json(const BoundsReport& report);

/// Throws FormatError on missing or mistyped fields.
GameRecord parse_game_record(const nlohmann::json& doc);
GameRecord read_game_record(const std::filesystem::path& path);

}  // namespace taxman

#endif  // TAXMAN_SERIALIZATION_HPP
