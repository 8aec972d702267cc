#ifndef TAXMAN_GAME_HPP
#define TAXMAN_GAME_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "taxman/poset.hpp"
#include "taxman/types.hpp"

namespace taxman {

enum class Outcome { win, tie, loss };

std::string_view to_string(Outcome outcome);

enum class PickError { none, not_in_play, no_tax };

std::string_view to_string(PickError error);

/// One player move and the taxman's haul for it (ascending).
struct Move {
  Element pick = 0;
  std::vector<Element> taxed;

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

std::vector<Element> picks_of(const MoveSequence& moves);

class IllegalPick : public std::runtime_error {
 public:
  IllegalPick(Element pick, PickError reason,
              std::optional<std::size_t> index = std::nullopt);

  Element pick() const { return pick_; }
  PickError reason() const { return reason_; }
  /// Position in a batch replay, when the pick came from one.
  std::optional<std::size_t> index() const { return index_; }

 private:
  Element pick_;
  PickError reason_;
  std::optional<std::size_t> index_;
};

class GameNotOver : public std::logic_error {
 public:
  GameNotOver() : std::logic_error("legal picks remain; the game is not over") {}
};

/// Live state of a taxman game, either the standard game on {1..N} with
/// divisibility or the generalized game on an explicit graded poset.
///
/// Invariant: player_score + taxman_score + in_play_weight == total_weight.
class GameState {
 public:
  /// Throws std::invalid_argument when n < 1.
  static GameState standard(int n);
  static GameState on_poset(std::shared_ptr<const GradedPoset> poset);

  bool is_standard() const { return poset_ == nullptr; }
  /// Pot size N for the standard game, |P| otherwise.
  int size() const { return size_; }
  /// Labels run first_label() .. first_label() + size() - 1.
  Element first_label() const { return is_standard() ? 1 : 0; }
  bool contains(Element e) const {
    return e >= first_label() && e < first_label() + size_;
  }
  const std::shared_ptr<const GradedPoset>& poset() const { return poset_; }

  Weight weight(Element e) const;
  /// Strict order of the arena: divisibility or the poset relation.
  bool less(Element a, Element b) const;

  bool in_play(Element e) const {
    return contains(e) && in_play_[slot(e)] != 0;
  }
  std::vector<Element> in_play_elements() const;

  Weight player_score() const { return player_score_; }
  Weight taxman_score() const { return taxman_score_; }
  Weight in_play_weight() const { return in_play_weight_; }
  Weight total_weight() const { return total_weight_; }
  const MoveSequence& history() const { return history_; }
  bool finalized() const { return finalized_; }

  PickError check_pick(Element e) const;
  bool is_legal(Element e) const { return check_pick(e) == PickError::none; }
  std::vector<Element> legal_picks() const;
  bool has_legal_pick() const;

  /// Applies a pick in place and returns the recorded move.
  /// Throws IllegalPick.
  const Move& pick(Element e);

  /// Hands every remaining element to the taxman. Throws GameNotOver while
  /// legal picks remain.
  void finalize();

  /// Ends the game early: the taxman takes everything still in play even if
  /// legal picks remain.
  void concede();

  /// Comparison of the current scores; ties are their own outcome.
  Outcome outcome() const;

  friend bool operator==(const GameState& a, const GameState& b);

 private:
  GameState(int size, std::shared_ptr<const GradedPoset> poset);

  std::size_t slot(Element e) const {
    return static_cast<std::size_t>(e - first_label());
  }
  template <class Fn>
  void for_each_below(Element e, Fn&& fn) const;

  int size_ = 0;
  std::shared_ptr<const GradedPoset> poset_;
  std::vector<char> in_play_;
  Weight player_score_ = 0;
  Weight taxman_score_ = 0;
  Weight in_play_weight_ = 0;
  Weight total_weight_ = 0;
  MoveSequence history_;
  bool finalized_ = false;
};

GameState new_standard_game(int n);

std::vector<Element> legal_picks(const GameState& state);

/// Pure move application: returns the successor state.
GameState apply_pick(GameState state, Element pick);

GameState finalize(GameState state);

/// Replays `picks` from a fresh game and finalizes it. IllegalPick carries
/// the index of the first offending pick.
GameState play_sequence(int n, std::span<const Element> picks);
GameState play_sequence(std::shared_ptr<const GradedPoset> poset,
                        std::span<const Element> picks);
/// Replays on top of an existing (unfinalized) state without finalizing.
void replay_into(GameState& state, std::span<const Element> picks);

}  // namespace taxman

#endif  // TAXMAN_GAME_HPP
