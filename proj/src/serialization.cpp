#include "taxman/serialization.hpp"

#include <fstream>

namespace taxman {

using nlohmann::json;

json to_json(const Move& move) {
  return json{{"pick", move.pick}, {"taxed", move.taxed}};
}

json to_json(const GameState& state) {
  return json{{"n", state.size()},
              {"picks", picks_of(state.history())},
              {"player_score", state.player_score()},
              {"taxman_score", state.taxman_score()}};
}

json state_payload(const GameState& state) {
  json out = to_json(state);
  out["in_play"] = state.in_play_elements();
  out["legal_picks"] = state.legal_picks();
  json history = json::array();
  for (const Move& m : state.history()) history.push_back(to_json(m));
  out["history"] = std::move(history);
  out["game_over"] = state.finalized();
  out["outcome"] = state.finalized() ? json(std::string(to_string(state.outcome())))
                                     : json(nullptr);
  return out;
}

json to_json(const BoundsReport& report) {
  json out{{"n", report.n},
           {"lower", report.lower},
           {"upper", report.upper},
           {"witness", report.witness}};
  out["optimal"] = report.optimal ? json(*report.optimal) : json(nullptr);
  return out;
}

GameRecord parse_game_record(const json& doc) {
  if (!doc.is_object()) throw FormatError("game record must be a JSON object");
  GameRecord record;
  const auto n = doc.find("n");
  if (n == doc.end() || !n->is_number_integer()) {
    throw FormatError("game record needs an integer \"n\"");
  }
  record.n = n->get<int>();
  if (record.n < 1) throw FormatError("\"n\" must be positive");
  const auto picks = doc.find("picks");
  if (picks == doc.end() || !picks->is_array()) {
    throw FormatError("game record needs a \"picks\" array");
  }
  for (const json& p : *picks) {
    if (!p.is_number_integer()) throw FormatError("picks must be integers");
    record.picks.push_back(p.get<Element>());
  }
  return record;
}

GameRecord read_game_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return parse_game_record(doc);
}

}  // namespace taxman
