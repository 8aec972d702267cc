#include "taxman/bounds.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "taxman/blossom.hpp"
#include "taxman/matching_bridge.hpp"

namespace taxman {

Matching max_weight_matching(const CoverGraph& g) {
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edges().size());
  for (const CoverEdge& e : g.edges()) {
    edges.push_back({static_cast<int>(g.slot(e.lower)),
                     static_cast<int>(g.slot(e.upper)), e.weight});
  }
  const std::vector<int> mate = max_weight_matching(g.vertex_count(), edges);
  Matching m;
  for (const CoverEdge& e : g.edges()) {
    if (mate[g.slot(e.lower)] == static_cast<int>(g.slot(e.upper))) m.add(e);
  }
  return m;
}

Weight upper_bound(int n) {
  const SpfTable spf(n);
  return max_weight_matching(build_divisor_cover_graph(n, spf)).weight();
}

std::vector<Element> greedy_fas_order(const OrientedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const Element base = g.first_label();
  auto slot = [&](Element v) { return static_cast<std::size_t>(v - base); };

  std::vector<int> outdeg(n), indeg(n);
  std::vector<char> alive(n, 1);
  for (const Arc& a : g.arcs()) {
    ++outdeg[slot(a.from)];
    ++indeg[slot(a.to)];
  }
  // Keyed by (-(out - in), label) so begin() is the next greedy choice.
  std::set<std::pair<int, Element>> by_delta;
  std::vector<Element> sinks, sources;
  for (std::size_t i = 0; i < n; ++i) {
    const Element v = base + static_cast<Element>(i);
    by_delta.emplace(indeg[i] - outdeg[i], v);
  }
  for (std::size_t i = n; i-- > 0;) {
    const Element v = base + static_cast<Element>(i);
    if (outdeg[i] == 0) {
      sinks.push_back(v);
    } else if (indeg[i] == 0) {
      sources.push_back(v);
    }
  }

  std::vector<Element> front, back;
  std::size_t remaining = n;
  auto remove = [&](Element v) {
    const std::size_t s = slot(v);
    alive[s] = 0;
    --remaining;
    by_delta.erase({indeg[s] - outdeg[s], v});
    for (std::size_t ai : g.out_arcs(v)) {
      const Element w = g.arcs()[ai].to;
      const std::size_t ws = slot(w);
      if (!alive[ws]) continue;
      by_delta.erase({indeg[ws] - outdeg[ws], w});
      --indeg[ws];
      by_delta.emplace(indeg[ws] - outdeg[ws], w);
      if (indeg[ws] == 0 && outdeg[ws] != 0) sources.push_back(w);
    }
    for (std::size_t ai : g.in_arcs(v)) {
      const Element u = g.arcs()[ai].from;
      const std::size_t us = slot(u);
      if (!alive[us]) continue;
      by_delta.erase({indeg[us] - outdeg[us], u});
      --outdeg[us];
      by_delta.emplace(indeg[us] - outdeg[us], u);
      if (outdeg[us] == 0) sinks.push_back(u);
    }
  };

  while (remaining > 0) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      while (!sinks.empty()) {
        const Element v = sinks.back();
        sinks.pop_back();
        if (!alive[slot(v)]) continue;
        back.push_back(v);
        remove(v);
        progressed = true;
      }
      while (!sources.empty()) {
        const Element v = sources.back();
        sources.pop_back();
        const std::size_t s = slot(v);
        if (!alive[s] || indeg[s] != 0) continue;
        front.push_back(v);
        remove(v);
        progressed = true;
        if (!sinks.empty()) break;
      }
    }
    if (remaining == 0) break;
    const Element v = by_delta.begin()->second;
    front.push_back(v);
    remove(v);
  }
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

std::vector<std::size_t> feedback_arcs(const OrientedGraph& g,
                                       std::span<const Element> order) {
  std::vector<std::size_t> position(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[static_cast<std::size_t>(order[i] - g.first_label())] = i;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.arcs().size(); ++i) {
    const Arc& a = g.arcs()[i];
    if (position[static_cast<std::size_t>(a.from - g.first_label())] >
        position[static_cast<std::size_t>(a.to - g.first_label())]) {
      out.push_back(i);
    }
  }
  return out;
}

LowerBound fas_lower_bound(int n) {
  const SpfTable spf(n);
  const CoverGraph g = build_divisor_cover_graph(n, spf);
  Matching m = max_weight_matching(g);

  {
    const OrientedGraph oriented(g, m);
    const std::vector<Element> order = greedy_fas_order(oriented);
    for (std::size_t ai : feedback_arcs(oriented, order)) {
      const Arc& arc = oriented.arcs()[ai];
      if (arc.matched) m.remove(g.edges()[arc.edge]);
    }
  }
  // A correct feedback set leaves nothing here; any survivor loses its
  // lightest matched edge.
  while (auto cycle = find_flat_alternating_cycle(g, m)) {
    std::optional<CoverEdge> lightest;
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      const Element a = (*cycle)[i];
      const Element b = (*cycle)[(i + 1) % cycle->size()];
      for (const CoverEdge& e : m.pairs()) {
        if ((e.lower == a && e.upper == b) || (e.lower == b && e.upper == a)) {
          if (!lightest || e.weight < lightest->weight) lightest = e;
        }
      }
    }
    m.remove(*lightest);
  }

  LowerBound result;
  result.picks = order_matching_standard(m, g, spf);
  GameState state = GameState::standard(n);
  replay_into(state, result.picks);
  result.score = state.player_score();
  result.matching = std::move(m);
  return result;
}

BoundsReport bounds_report(int n, bool with_oracle, int oracle_cap) {
  if (n < 1) throw std::invalid_argument("pot size must be positive");
  if (with_oracle && n > oracle_cap) {
    throw OracleInfeasible("n = " + std::to_string(n) + " is above the oracle cap " +
                           std::to_string(oracle_cap));
  }
  BoundsReport report;
  report.n = n;
  LowerBound lower = fas_lower_bound(n);
  report.lower = lower.score;
  report.witness = std::move(lower.picks);
  report.upper = upper_bound(n);
  if (with_oracle) report.optimal = optimal_score(n, oracle_cap).score;
  return report;
}

GradedPoset bipartite_to_taxman(std::span<const int> a_vertices,
                                std::span<const int> b_vertices,
                                std::span<const std::pair<int, int>> edges) {
  std::map<int, Element> a_index, b_index;
  for (int label : a_vertices) {
    if (!a_index.emplace(label, static_cast<Element>(a_index.size())).second) {
      throw NotBipartite("vertex " + std::to_string(label) + " repeated in A");
    }
  }
  const auto a_count = static_cast<Element>(a_vertices.size());
  for (int label : b_vertices) {
    if (a_index.contains(label)) {
      throw NotBipartite("vertex " + std::to_string(label) + " is on both sides");
    }
    if (!b_index.emplace(label, a_count + static_cast<Element>(b_index.size())).second) {
      throw NotBipartite("vertex " + std::to_string(label) + " repeated in B");
    }
  }
  std::set<Relation> relations;
  for (const auto& [from, to] : edges) {
    const auto a = a_index.find(from);
    const auto b = b_index.find(to);
    if (a == a_index.end() || b == b_index.end()) {
      throw NotBipartite("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                         ") does not run from A to B");
    }
    if (!relations.emplace(b->second, a->second).second) {
      throw NotBipartite("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                         ") is repeated");
    }
  }
  const int size = static_cast<int>(a_vertices.size() + b_vertices.size());
  std::vector<int> ranks(size, 0);
  std::fill(ranks.begin(), ranks.begin() + a_count, 1);
  const std::vector<Relation> rel(relations.begin(), relations.end());
  return GradedPoset(size, rel, std::move(ranks), std::vector<Weight>(size, 1));
}

}  // namespace taxman
