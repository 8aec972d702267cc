#include "taxman/game.hpp"

#include <algorithm>
#include <string>

namespace taxman {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::win:
      return "WIN";
    case Outcome::tie:
      return "TIE";
    case Outcome::loss:
      return "LOSS";
  }
  return "?";
}

std::string_view to_string(PickError error) {
  switch (error) {
    case PickError::none:
      return "ok";
    case PickError::not_in_play:
      return "not-in-play";
    case PickError::no_tax:
      return "no-tax";
  }
  return "?";
}

std::vector<Element> picks_of(const MoveSequence& moves) {
  std::vector<Element> picks;
  picks.reserve(moves.size());
  for (const Move& m : moves) picks.push_back(m.pick);
  return picks;
}

namespace {

std::string illegal_message(Element pick, PickError reason,
                            std::optional<std::size_t> index) {
  std::string msg = "illegal pick " + std::to_string(pick) + " (" +
                    std::string(to_string(reason)) + ")";
  if (index) msg += " at index " + std::to_string(*index);
  return msg;
}

}  // namespace

IllegalPick::IllegalPick(Element pick, PickError reason,
                         std::optional<std::size_t> index)
    : std::runtime_error(illegal_message(pick, reason, index)),
      pick_(pick),
      reason_(reason),
      index_(index) {}

GameState::GameState(int size, std::shared_ptr<const GradedPoset> poset)
    : size_(size),
      poset_(std::move(poset)),
      in_play_(static_cast<std::size_t>(size), 1) {
  if (is_standard()) {
    total_weight_ = Weight{size} * (size + 1) / 2;
  } else {
    total_weight_ = poset_->total_weight();
  }
  in_play_weight_ = total_weight_;
}

GameState GameState::standard(int n) {
  if (n < 1) {
    throw std::invalid_argument("pot size must be positive, got " +
                                std::to_string(n));
  }
  return GameState(n, nullptr);
}

GameState GameState::on_poset(std::shared_ptr<const GradedPoset> poset) {
  if (!poset) throw std::invalid_argument("null poset");
  const int size = poset->size();
  return GameState(size, std::move(poset));
}

Weight GameState::weight(Element e) const {
  return is_standard() ? Weight{e} : poset_->weight(e);
}

bool GameState::less(Element a, Element b) const {
  if (is_standard()) return a != b && b % a == 0;
  return poset_->less(a, b);
}

template <class Fn>
void GameState::for_each_below(Element e, Fn&& fn) const {
  if (is_standard()) {
    for (Element d = 1; d * d <= e; ++d) {
      if (e % d != 0) continue;
      if (d != e) fn(d);
      const Element co = e / d;
      if (co != d && co != e) fn(co);
    }
  } else {
    for (Element x = 0; x < size_; ++x) {
      if (poset_->less(x, e)) fn(x);
    }
  }
}

std::vector<Element> GameState::in_play_elements() const {
  std::vector<Element> out;
  for (Element e = first_label(); e < first_label() + size_; ++e) {
    if (in_play_[slot(e)]) out.push_back(e);
  }
  return out;
}

PickError GameState::check_pick(Element e) const {
  if (!in_play(e)) return PickError::not_in_play;
  bool taxed = false;
  for_each_below(e, [&](Element d) { taxed = taxed || in_play_[slot(d)]; });
  return taxed ? PickError::none : PickError::no_tax;
}

std::vector<Element> GameState::legal_picks() const {
  std::vector<Element> out;
  for (Element e = first_label(); e < first_label() + size_; ++e) {
    if (is_legal(e)) out.push_back(e);
  }
  return out;
}

bool GameState::has_legal_pick() const {
  if (is_standard() && in_play(1)) {
    // 1 divides everything, so any second element is a legal pick.
    for (Element e = 2; e <= size_; ++e) {
      if (in_play_[slot(e)]) return true;
    }
    return false;
  }
  for (Element e = first_label(); e < first_label() + size_; ++e) {
    if (is_legal(e)) return true;
  }
  return false;
}

const Move& GameState::pick(Element e) {
  const PickError err = finalized_ ? PickError::not_in_play : check_pick(e);
  if (err != PickError::none) throw IllegalPick(e, err);
  Move move{e, {}};
  for_each_below(e, [&](Element d) {
    if (in_play_[slot(d)]) move.taxed.push_back(d);
  });
  std::sort(move.taxed.begin(), move.taxed.end());
  in_play_[slot(e)] = 0;
  player_score_ += weight(e);
  in_play_weight_ -= weight(e);
  for (Element d : move.taxed) {
    in_play_[slot(d)] = 0;
    taxman_score_ += weight(d);
    in_play_weight_ -= weight(d);
  }
  history_.push_back(std::move(move));
  return history_.back();
}

void GameState::finalize() {
  if (finalized_) return;
  if (has_legal_pick()) throw GameNotOver();
  concede();
}

void GameState::concede() {
  if (finalized_) return;
  std::fill(in_play_.begin(), in_play_.end(), 0);
  taxman_score_ += in_play_weight_;
  in_play_weight_ = 0;
  finalized_ = true;
}

Outcome GameState::outcome() const {
  if (player_score_ > taxman_score_) return Outcome::win;
  if (player_score_ == taxman_score_) return Outcome::tie;
  return Outcome::loss;
}

bool operator==(const GameState& a, const GameState& b) {
  return a.size_ == b.size_ && a.poset_ == b.poset_ &&
         a.in_play_ == b.in_play_ && a.player_score_ == b.player_score_ &&
         a.taxman_score_ == b.taxman_score_ && a.history_ == b.history_ &&
         a.finalized_ == b.finalized_;
}

GameState new_standard_game(int n) { return GameState::standard(n); }

std::vector<Element> legal_picks(const GameState& state) {
  return state.legal_picks();
}

GameState apply_pick(GameState state, Element pick) {
  state.pick(pick);
  return state;
}

GameState finalize(GameState state) {
  state.finalize();
  return state;
}

void replay_into(GameState& state, std::span<const Element> picks) {
  for (std::size_t i = 0; i < picks.size(); ++i) {
    try {
      state.pick(picks[i]);
    } catch (const IllegalPick& e) {
      throw IllegalPick(e.pick(), e.reason(), i);
    }
  }
}

GameState play_sequence(int n, std::span<const Element> picks) {
  GameState state = GameState::standard(n);
  replay_into(state, picks);
  state.finalize();
  return state;
}

GameState play_sequence(std::shared_ptr<const GradedPoset> poset,
                        std::span<const Element> picks) {
  GameState state = GameState::on_poset(std::move(poset));
  replay_into(state, picks);
  state.finalize();
  return state;
}

}  // namespace taxman
