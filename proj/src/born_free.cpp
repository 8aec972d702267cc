#include "taxman/born_free.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace taxman {

namespace {

void check_config(const BornFreeConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("pot size must be positive");
  if (!cfg.p_max) return;
  const int p = *cfg.p_max;
  bool prime = p >= 2;
  for (int d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw std::invalid_argument("p_max must be a prime");
}

OrderedPlay play_from_picks(int n, std::span<const Element> picks,
                            const CoverGraph& g) {
  GameState state = GameState::standard(n);
  replay_into(state, picks);
  OrderedPlay play;
  play.matching = sequence_to_matching(state.history(), g);
  play.score = state.player_score();
  play.sequence = state.history();
  return play;
}

}  // namespace

Matching born_free_matching(const BornFreeConfig& cfg, const SpfTable& spf,
                            std::span<const char> available) {
  check_config(cfg);
  const int n = cfg.n;
  if (spf.n_max() < n) throw std::invalid_argument("sieve table does not cover the pot");
  if (available.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("availability mask must have n + 1 entries");
  }
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  Matching m;
  for (int p = n; p >= 2; --p) {
    if (!spf.is_prime(p) || (cfg.p_max && p > *cfg.p_max)) continue;
    for (int x = n / p; x >= 1; --x) {
      const int y = p * x;
      if (used[x] || used[y] || !available[x] || !available[y]) continue;
      used[x] = used[y] = 1;
      m.add({x, y, y});
    }
  }
  return m;
}

Matching born_free_matching(const BornFreeConfig& cfg, const SpfTable& spf) {
  check_config(cfg);
  const std::vector<char> all(static_cast<std::size_t>(cfg.n) + 1, 1);
  return born_free_matching(cfg, spf, all);
}

OrderedPlay born_free_play_raw(const BornFreeConfig& cfg) {
  check_config(cfg);
  const SpfTable spf(cfg.n);
  const CoverGraph g = build_divisor_cover_graph(cfg.n, spf);
  const Matching m = born_free_matching(cfg, spf);
  const std::vector<Element> order = order_matching_standard(m, g, spf);
  return play_from_picks(cfg.n, order, g);
}

OrderedPlay born_free_play(const BornFreeConfig& cfg) {
  check_config(cfg);
  if (!cfg.p_max) {
    static constexpr std::array<Element, 3> kSeven{7, 4, 6};
    static constexpr std::array<Element, 5> kThirteen{13, 9, 10, 8, 12};
    std::span<const Element> line;
    if (cfg.n == 7) line = kSeven;
    if (cfg.n == 13) line = kThirteen;
    if (!line.empty()) {
      const SpfTable spf(cfg.n);
      return play_from_picks(cfg.n, line, build_divisor_cover_graph(cfg.n, spf));
    }
  }
  return born_free_play_raw(cfg);
}

Rational analytic_lower_ratio(int n) {
  if (n < 1) throw std::invalid_argument("pot size must be positive");
  const Rational N(n);
  return (Rational(1724) * N * N - Rational(29188) * N - Rational(15944)) /
         (Rational(3375) * (N * N + N));
}

Rational exact_pot_fraction(Weight score, int n) {
  if (n < 1) throw std::invalid_argument("pot size must be positive");
  return Rational(score) / Rational(Weight{n} * (n + 1) / 2);
}

double pot_fraction(const OrderedPlay& play, int n) {
  return static_cast<double>(play.score) /
         static_cast<double>(Weight{n} * (n + 1) / 2);
}

}  // namespace taxman
