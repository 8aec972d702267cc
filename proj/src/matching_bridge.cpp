#include "taxman/matching_bridge.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

namespace taxman {

Matching sequence_to_matching(const MoveSequence& seq, const CoverGraph& g) {
  Matching m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Move& move = seq[i];
    if (move.taxed.empty()) {
      throw IllegalSequence("move " + std::to_string(i) + " taxed nothing");
    }
    if (!g.contains(move.pick)) {
      throw IllegalSequence("move " + std::to_string(i) + " picks an unknown element");
    }
    Element top = move.taxed.front();
    for (Element t : move.taxed) {
      if (!g.contains(t)) {
        throw IllegalSequence("move " + std::to_string(i) + " taxes an unknown element");
      }
      if (g.rank(t) > g.rank(top) || (g.rank(t) == g.rank(top) && t > top)) {
        top = t;
      }
    }
    const auto idx = g.find_edge(top, move.pick);
    if (!idx || g.edges()[*idx].upper != move.pick) {
      throw IllegalSequence("move " + std::to_string(i) + ": " +
                            std::to_string(top) + " is not covered by " +
                            std::to_string(move.pick));
    }
    try {
      m.add(g.edges()[*idx]);
    } catch (const NotAMatching& e) {
      throw IllegalSequence(std::string("move ") + std::to_string(i) + ": " + e.what());
    }
  }
  return m;
}

Matching picks_to_matching(int n, std::span<const Element> picks,
                           const CoverGraph& g) {
  GameState state = GameState::standard(n);
  try {
    replay_into(state, picks);
  } catch (const IllegalPick& e) {
    throw IllegalSequence(e.what());
  }
  return sequence_to_matching(state.history(), g);
}

std::vector<Element> order_matching_standard(const Matching& m,
                                             const CoverGraph& g,
                                             const SpfTable& spf) {
  if (g.first_label() != 1) {
    throw std::invalid_argument("expected a divisor cover graph labelled 1..N");
  }
  const int n = g.vertex_count();
  if (n > spf.n_max()) {
    throw std::invalid_argument("sieve table does not cover the pot");
  }

  // Edges are checked arithmetically, which avoids the graph's incidence
  // lists. upper_of[x] is the matched upper of a lower x, 0 otherwise.
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<Element> upper_of(size, 0);
  std::vector<int> level_count;
  for (const CoverEdge& e : m.pairs()) {
    const bool edge = e.lower >= 1 && e.upper <= n && e.lower < e.upper &&
                      e.upper % e.lower == 0 && spf.is_prime(e.upper / e.lower) &&
                      e.weight == g.weight(e.upper);
    if (!edge) {
      throw NotAMatching("(" + std::to_string(e.lower) + ", " +
                         std::to_string(e.upper) + ") is not an edge of the graph");
    }
    upper_of[e.lower] = e.upper;
    const auto r = static_cast<std::size_t>(spf.rank_of(e.lower));
    if (level_count.size() <= r) level_count.resize(r + 1, 0);
    ++level_count[r];
  }

  // Pairs sorted by (rank of lower, lower). Level r owns the index range
  // [first[r], first[r + 1]), and index_of[x] is the pair index of a matched
  // lower x (-1 otherwise), so "x is a lower on level r" is a range test on
  // one small array.
  std::vector<int> first(level_count.size() + 1, 0);
  for (std::size_t r = 0; r < level_count.size(); ++r) first[r + 1] = first[r] + level_count[r];
  const auto pair_count = static_cast<std::size_t>(first.back());
  std::vector<Element> upper(pair_count);
  std::vector<int> index_of(size, -1);
  {
    std::vector<int> next(first.begin(), first.end() - 1);
    for (Element x = 1; x <= n; ++x) {
      if (upper_of[x] == 0) continue;
      const int i = next[static_cast<std::size_t>(spf.rank_of(x))]++;
      index_of[x] = i;
      upper[static_cast<std::size_t>(i)] = upper_of[x];
    }
  }
  upper_of = {};

  // Calls f(y / p) once for each distinct prime p of y.
  auto for_each_quotient = [&spf](Element y, auto&& f) {
    for (Element rest = y; rest > 1;) {
      const int p = spf.smallest_prime_factor(rest);
      f(y / p);
      do rest /= p; while (rest % p == 0);
    }
  };

  // Per level: pair i's upper sits above the lowers of pairs j listed in
  // below[..]; degree[i] counts them. Picking upper i is safe once degree 1,
  // i.e. only its own lower is left beneath it.
  std::vector<Element> order;
  order.reserve(pair_count);
  std::vector<std::int8_t> degree(pair_count, 0);
  std::vector<std::pair<int, int>> links;  // (lower pair j, upper pair i)
  std::vector<int> offsets;
  std::vector<int> above;  // upper pairs over each lower pair, grouped by j
  std::deque<int> ready;

  for (std::size_t r = 0; r + 1 < first.size(); ++r) {
    const int lo = first[r];
    const int hi = first[r + 1];
    if (lo == hi) continue;

    links.clear();
    for (int i = lo; i < hi; ++i) {
      for_each_quotient(upper[static_cast<std::size_t>(i)], [&](Element x) {
        const int j = index_of[x];
        if (j >= lo && j < hi) links.emplace_back(j, i);
      });
    }
    offsets.assign(static_cast<std::size_t>(hi - lo) + 1, 0);
    for (const auto& [j, i] : links) {
      ++offsets[static_cast<std::size_t>(j - lo) + 1];
      ++degree[static_cast<std::size_t>(i)];
    }
    for (std::size_t k = 1; k < offsets.size(); ++k) offsets[k] += offsets[k - 1];
    above.resize(links.size());
    {
      std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
      for (const auto& [j, i] : links) above[static_cast<std::size_t>(cursor[static_cast<std::size_t>(j - lo)]++)] = i;
    }
    for (int i = lo; i < hi; ++i) {
      if (degree[static_cast<std::size_t>(i)] == 1) ready.push_back(i);
    }

    int emitted = 0;
    while (!ready.empty()) {
      const int i = ready.front();
      ready.pop_front();
      order.push_back(upper[static_cast<std::size_t>(i)]);
      ++emitted;
      degree[static_cast<std::size_t>(i)] = 0;
      // Pair i's lower goes with it, which frees every other upper above it.
      const auto k0 = static_cast<std::size_t>(offsets[static_cast<std::size_t>(i - lo)]);
      const auto k1 = static_cast<std::size_t>(offsets[static_cast<std::size_t>(i - lo) + 1]);
      for (std::size_t k = k0; k < k1; ++k) {
        auto& d = degree[static_cast<std::size_t>(above[k])];
        if (d > 0 && --d == 1) ready.push_back(above[k]);
      }
    }
    if (emitted != hi - lo) {
      throw FlatCycleDetected("matched pairs between ranks " + std::to_string(r) +
                              " and " + std::to_string(r + 1) +
                              " contain a flat alternating cycle");
    }
  }
  return order;
}

std::vector<Element> order_matching_general(const Matching& m,
                                            const GradedPoset& poset) {
  std::vector<CoverEdge> pairs = m.sorted_pairs();
  for (const CoverEdge& e : pairs) {
    if (e.lower < 0 || e.upper >= poset.size() || !poset.covers(e.lower, e.upper)) {
      throw NotAMatching("(" + std::to_string(e.lower) + ", " +
                         std::to_string(e.upper) + ") is not a cover pair");
    }
  }
  std::vector<Element> order;
  std::vector<char> alive(pairs.size(), 1);
  for (std::size_t remaining = pairs.size(); remaining > 0; --remaining) {
    std::size_t at = 0;
    while (!alive[at]) ++at;
    std::vector<char> visited(pairs.size(), 0);
    for (;;) {
      if (visited[at]) {
        throw FlatCycleDetected("chase revisited the pair (" +
                                std::to_string(pairs[at].lower) + ", " +
                                std::to_string(pairs[at].upper) + ")");
      }
      visited[at] = 1;
      std::size_t next = pairs.size();
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (j != at && alive[j] && poset.less(pairs[j].lower, pairs[at].upper)) {
          next = j;
          break;
        }
      }
      if (next == pairs.size()) break;
      at = next;
    }
    order.push_back(pairs[at].upper);
    alive[at] = 0;
  }
  return order;
}

bool roundtrip_check(int n, std::span<const Element> picks) {
  const SpfTable spf(n);
  const CoverGraph g = build_divisor_cover_graph(n, spf);
  const GameState original = [&] {
    GameState s = GameState::standard(n);
    replay_into(s, picks);
    return s;
  }();
  const Matching m = sequence_to_matching(original.history(), g);
  const std::vector<Element> reordered = order_matching_standard(m, g, spf);
  GameState replayed = GameState::standard(n);
  replay_into(replayed, reordered);

  std::vector<Element> a(picks.begin(), picks.end());
  std::vector<Element> b = reordered;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && replayed.player_score() == original.player_score() &&
         replayed.player_score() == m.weight();
}

}  // namespace taxman
