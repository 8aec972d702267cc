#include "taxman/cover_graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace taxman {

namespace {

// Compressed adjacency: bucket `items` by key.
void build_csr(std::size_t bucket_count, std::span<const std::size_t> keys,
               std::vector<std::size_t>& offsets,
               std::vector<std::size_t>& items) {
  offsets.assign(bucket_count + 1, 0);
  for (std::size_t k : keys) ++offsets[k + 1];
  for (std::size_t i = 0; i < bucket_count; ++i) offsets[i + 1] += offsets[i];
  items.assign(keys.size(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < keys.size(); ++i) items[cursor[keys[i]]++] = i;
}

}  // namespace

CoverGraph::CoverGraph(Element first_label, std::vector<int> ranks,
                       std::vector<Weight> weights, std::vector<CoverEdge> edges)
    : first_label_(first_label),
      ranks_(std::move(ranks)),
      weights_(std::move(weights)),
      edges_(std::move(edges)) {
  if (ranks_.size() != weights_.size()) {
    throw std::invalid_argument("CoverGraph: ranks and weights differ in size");
  }
  std::vector<std::size_t> endpoint_slots;
  endpoint_slots.reserve(edges_.size() * 2);
  for (const CoverEdge& e : edges_) {
    if (!contains(e.lower) || !contains(e.upper)) {
      throw std::invalid_argument("CoverGraph: edge endpoint out of range");
    }
    if (rank(e.upper) != rank(e.lower) + 1) {
      throw std::invalid_argument("CoverGraph: edge (" +
                                  std::to_string(e.lower) + ", " +
                                  std::to_string(e.upper) +
                                  ") does not step rank by one");
    }
    if (e.weight != weight(e.upper)) {
      throw std::invalid_argument("CoverGraph: edge weight must equal w(upper)");
    }
  }
  // Each edge appears twice in the incidence list.
  std::vector<std::size_t> keys;
  keys.reserve(edges_.size() * 2);
  for (const CoverEdge& e : edges_) {
    keys.push_back(slot(e.lower));
    keys.push_back(slot(e.upper));
  }
  build_csr(ranks_.size(), keys, incidence_offsets_, incidence_);
  for (std::size_t& item : incidence_) item /= 2;
}

std::span<const std::size_t> CoverGraph::incident(Element e) const {
  const std::size_t s = slot(e);
  return std::span<const std::size_t>(incidence_)
      .subspan(incidence_offsets_[s],
               incidence_offsets_[s + 1] - incidence_offsets_[s]);
}

std::optional<std::size_t> CoverGraph::find_edge(Element a, Element b) const {
  if (!contains(a) || !contains(b)) return std::nullopt;
  // Small numbers touch many edges; scan the shorter list.
  const auto near = incident(a).size() <= incident(b).size() ? incident(a) : incident(b);
  for (std::size_t idx : near) {
    const CoverEdge& e = edges_[idx];
    if ((e.lower == a && e.upper == b) || (e.lower == b && e.upper == a)) {
      return idx;
    }
  }
  return std::nullopt;
}

CoverGraph build_divisor_cover_graph(int n, const SpfTable& spf) {
  if (n < 1) throw std::invalid_argument("pot size must be positive");
  if (spf.n_max() < n) {
    throw std::invalid_argument("sieve table does not cover the pot");
  }
  std::vector<int> primes = primes_up_to(n);
  std::reverse(primes.begin(), primes.end());
  std::vector<int> ranks(n);
  std::vector<Weight> weights(n);
  std::vector<CoverEdge> edges;
  for (int x = 1; x <= n; ++x) {
    ranks[x - 1] = spf.rank_of(x);
    weights[x - 1] = x;
    for (int p : primes) {
      if (std::int64_t{p} * x > n) break;
      edges.push_back({x, p * x, p * x});
    }
  }
  return CoverGraph(1, std::move(ranks), std::move(weights), std::move(edges));
}

CoverGraph build_poset_cover_graph(const GradedPoset& poset) {
  const int size = poset.size();
  std::vector<int> ranks(size);
  std::vector<Weight> weights(size);
  std::vector<CoverEdge> edges;
  for (int a = 0; a < size; ++a) {
    ranks[a] = poset.rank(a);
    weights[a] = poset.weight(a);
    for (int b = 0; b < size; ++b) {
      if (poset.covers(a, b)) edges.push_back({a, b, poset.weight(b)});
    }
  }
  try {
    return CoverGraph(0, std::move(ranks), std::move(weights), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw InvalidPoset(e.what());
  }
}

void Matching::add(const CoverEdge& edge) {
  if (edge.lower == edge.upper || used_.contains(edge.lower) ||
      used_.contains(edge.upper)) {
    throw NotAMatching("edge (" + std::to_string(edge.lower) + ", " +
                       std::to_string(edge.upper) +
                       ") shares an endpoint with the matching");
  }
  pairs_.push_back(edge);
  used_.insert(edge.lower);
  used_.insert(edge.upper);
  weight_ += edge.weight;
}

void Matching::remove(const CoverEdge& edge) {
  auto it = std::find(pairs_.begin(), pairs_.end(), edge);
  if (it == pairs_.end()) return;
  used_.erase(edge.lower);
  used_.erase(edge.upper);
  weight_ -= edge.weight;
  pairs_.erase(it);
}

std::vector<CoverEdge> Matching::sorted_pairs() const {
  std::vector<CoverEdge> out = pairs_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> Matching::uppers() const {
  std::vector<Element> out;
  out.reserve(pairs_.size());
  for (const CoverEdge& e : pairs_) out.push_back(e.upper);
  return out;
}

Matching make_matching(const CoverGraph& g,
                       std::span<const std::pair<Element, Element>> pairs) {
  Matching m;
  for (const auto& [lo, hi] : pairs) {
    const auto idx = g.find_edge(lo, hi);
    if (!idx || g.edges()[*idx].lower != lo) {
      throw NotAMatching("(" + std::to_string(lo) + ", " + std::to_string(hi) +
                         ") is not a cover edge");
    }
    m.add(g.edges()[*idx]);
  }
  return m;
}

void check_matching(const CoverGraph& g, const Matching& m) {
  for (const CoverEdge& e : m.pairs()) {
    const auto idx = g.find_edge(e.lower, e.upper);
    if (!idx || g.edges()[*idx] != e) {
      throw NotAMatching("(" + std::to_string(e.lower) + ", " +
                         std::to_string(e.upper) + ") is not an edge of the graph");
    }
  }
}

Weight matching_weight(const Matching& m) {
  Weight total = 0;
  for (const CoverEdge& e : m.pairs()) total += e.weight;
  return total;
}

OrientedGraph::OrientedGraph(const CoverGraph& g, const Matching& m)
    : vertex_count_(g.vertex_count()), first_label_(g.first_label()) {
  std::vector<Element> mate(static_cast<std::size_t>(vertex_count_),
                            first_label_ - 1);
  for (const CoverEdge& e : m.pairs()) mate[g.slot(e.lower)] = e.upper;
  const auto edges = g.edges();
  arcs_.reserve(edges.size());
  std::vector<std::size_t> tails, heads;
  tails.reserve(edges.size());
  heads.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const CoverEdge& e = edges[i];
    const bool matched = mate[g.slot(e.lower)] == e.upper;
    Arc arc = matched ? Arc{e.upper, e.lower, i, true}
                      : Arc{e.lower, e.upper, i, false};
    tails.push_back(g.slot(arc.from));
    heads.push_back(g.slot(arc.to));
    arcs_.push_back(arc);
  }
  build_csr(static_cast<std::size_t>(vertex_count_), tails, out_offsets_, out_);
  build_csr(static_cast<std::size_t>(vertex_count_), heads, in_offsets_, in_);
}

std::span<const std::size_t> OrientedGraph::out_arcs(Element v) const {
  const auto s = static_cast<std::size_t>(v - first_label_);
  return std::span<const std::size_t>(out_).subspan(
      out_offsets_[s], out_offsets_[s + 1] - out_offsets_[s]);
}

std::span<const std::size_t> OrientedGraph::in_arcs(Element v) const {
  const auto s = static_cast<std::size_t>(v - first_label_);
  return std::span<const std::size_t>(in_).subspan(
      in_offsets_[s], in_offsets_[s + 1] - in_offsets_[s]);
}

std::optional<std::vector<Element>> find_directed_cycle(const OrientedGraph& g) {
  enum : char { white, gray, black };
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const Element base = g.first_label();
  std::vector<char> colour(n, white);
  std::vector<Element> parent(n, base - 1);
  // Explicit stack of (vertex, next out-arc position).
  std::vector<std::pair<Element, std::size_t>> stack;

  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != white) continue;
    stack.emplace_back(base + static_cast<Element>(root), 0);
    colour[root] = gray;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      const auto outs = g.out_arcs(v);
      if (pos == outs.size()) {
        colour[static_cast<std::size_t>(v - base)] = black;
        stack.pop_back();
        continue;
      }
      const Element w = g.arcs()[outs[pos++]].to;
      const auto ws = static_cast<std::size_t>(w - base);
      if (colour[ws] == white) {
        colour[ws] = gray;
        parent[ws] = v;
        stack.emplace_back(w, 0);
      } else if (colour[ws] == gray) {
        std::vector<Element> cycle;
        for (Element x = v; x != w; x = parent[static_cast<std::size_t>(x - base)]) {
          cycle.push_back(x);
        }
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> find_flat_alternating_cycle(
    const CoverGraph& g, const Matching& m) {
  check_matching(g, m);
  if (m.empty()) return std::nullopt;
  return find_directed_cycle(OrientedGraph(g, m));
}

void write_edge_list(std::ostream& out, const CoverGraph& g) {
  for (const CoverEdge& e : g.edges()) {
    out << e.lower << ' ' << e.upper << ' ' << e.weight << '\n';
  }
}

}  // namespace taxman
