// Independent reference implementations used as test oracles. Nothing here
// calls into the code paths it is used to check.
#ifndef TAXMAN_TESTS_SUPPORT_HPP
#define TAXMAN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "taxman/blossom.hpp"
#include "taxman/cover_graph.hpp"
#include "taxman/game.hpp"

namespace taxman::testing {

inline int trial_division_spf(int k) {
  for (int d = 2; d * d <= k; ++d) {
    if (k % d == 0) return d;
  }
  return k;
}

inline int trial_division_omega(int k) {
  int count = 0;
  for (int d = 2; d * d <= k; ++d) {
    while (k % d == 0) {
      k /= d;
      ++count;
    }
  }
  return count + (k > 1 ? 1 : 0);
}

inline bool trial_division_is_prime(int k) {
  return k >= 2 && trial_division_spf(k) == k;
}

/// Plays uniformly random legal picks until none is left.
inline std::vector<Element> random_playout(int n, std::mt19937& rng) {
  GameState state = GameState::standard(n);
  std::vector<Element> picks;
  for (;;) {
    const std::vector<Element> legal = state.legal_picks();
    if (legal.empty()) break;
    const Element e = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
    state.pick(e);
    picks.push_back(e);
  }
  return picks;
}

/// Heaviest matching by enumerating every edge subset with disjoint ends.
inline Weight brute_force_max_matching(int vertex_count,
                                       const std::vector<WeightedEdge>& edges) {
  std::vector<char> used(static_cast<std::size_t>(vertex_count), 0);
  Weight best = 0;
  std::function<void(std::size_t, Weight)> go = [&](std::size_t i, Weight w) {
    best = std::max(best, w);
    if (i == edges.size()) return;
    go(i + 1, w);
    const auto& e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      go(i + 1, w + e.weight);
      used[e.u] = used[e.v] = 0;
    }
  };
  go(0, 0);
  return best;
}

/// Every matching of g, as lists of edge indices.
inline void for_each_matching(const CoverGraph& g,
                              const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::set<Element> used;
  std::vector<std::size_t> chosen;
  const auto edges = g.edges();
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == edges.size()) {
      fn(chosen);
      return;
    }
    go(i + 1);
    const CoverEdge& e = edges[i];
    if (!used.contains(e.lower) && !used.contains(e.upper)) {
      used.insert(e.lower);
      used.insert(e.upper);
      chosen.push_back(i);
      go(i + 1);
      chosen.pop_back();
      used.erase(e.lower);
      used.erase(e.upper);
    }
  };
  go(0);
}

inline Matching matching_from_indices(const CoverGraph& g, const std::vector<std::size_t>& idx) {
  Matching m;
  for (std::size_t i : idx) m.add(g.edges()[i]);
  return m;
}

/// Searches for a flat alternating cycle by walking simple paths that
/// alternate matched and unmatched edges inside each pair of adjacent ranks.
inline bool brute_force_has_flat_alternating_cycle(const CoverGraph& g, const Matching& m) {
  std::set<std::pair<Element, Element>> matched;
  for (const CoverEdge& e : m.pairs()) {
    matched.insert({e.lower, e.upper});
    matched.insert({e.upper, e.lower});
  }
  int max_rank = 0;
  for (Element v = g.first_label(); v <= g.last_label(); ++v) max_rank = std::max(max_rank, g.rank(v));

  for (int r = 0; r < max_rank; ++r) {
    auto in_band = [&](Element v) { return g.rank(v) == r || g.rank(v) == r + 1; };
    std::map<Element, std::vector<Element>> adj;
    for (const CoverEdge& e : g.edges()) {
      if (in_band(e.lower) && in_band(e.upper)) {
        adj[e.lower].push_back(e.upper);
        adj[e.upper].push_back(e.lower);
      }
    }
    for (const auto& [start, _] : adj) {
      std::set<Element> on_path{start};
      // state: current vertex, status of first edge, status of last edge, length
      std::function<bool(Element, bool, bool, int)> walk = [&](Element v, bool first, bool last,
                                                              int len) -> bool {
        for (Element w : adj[v]) {
          const bool status = matched.contains({v, w});
          if (len > 0 && status == last) continue;
          if (w == start) {
            if (len >= 3 && status != first) return true;
            continue;
          }
          if (on_path.contains(w)) continue;
          on_path.insert(w);
          const bool found = walk(w, len == 0 ? status : first, status, len + 1);
          on_path.erase(w);
          if (found) return true;
        }
        return false;
      };
      if (walk(start, false, false, 0)) return true;
    }
  }
  return false;
}

/// Random matching on g; a prefix of a shuffled edge order taken greedily.
inline Matching random_matching(const CoverGraph& g, std::mt19937& rng, double keep = 1.0) {
  std::vector<std::size_t> order(g.edges().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution take(keep);
  Matching m;
  for (std::size_t i : order) {
    const CoverEdge& e = g.edges()[i];
    if (!m.touches(e.lower) && !m.touches(e.upper) && take(rng)) m.add(e);
  }
  return m;
}

}  // namespace taxman::testing

#endif  // TAXMAN_TESTS_SUPPORT_HPP
