#ifndef TAXMAN_COVER_GRAPH_HPP
#define TAXMAN_COVER_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "taxman/number_theory.hpp"
#include "taxman/poset.hpp"
#include "taxman/types.hpp"

namespace taxman {

/// A cover pair lower ⋖ upper, weighted by the upper element.
struct CoverEdge {
  Element lower = 0;
  Element upper = 0;
  Weight weight = 0;

  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

/// The cover relation of a graded poset as a weighted graph. Vertices carry
/// consecutive labels starting at first_label().
class CoverGraph {
 public:
  /// Throws std::invalid_argument if an edge does not step rank by one or is
  /// not weighted by its upper endpoint.
  CoverGraph(Element first_label, std::vector<int> ranks,
             std::vector<Weight> weights, std::vector<CoverEdge> edges);

  int vertex_count() const { return static_cast<int>(ranks_.size()); }
  Element first_label() const { return first_label_; }
  Element last_label() const { return first_label_ + vertex_count() - 1; }
  bool contains(Element e) const {
    return e >= first_label_ && e < first_label_ + vertex_count();
  }
  std::size_t slot(Element e) const {
    return static_cast<std::size_t>(e - first_label_);
  }

  int rank(Element e) const { return ranks_[slot(e)]; }
  Weight weight(Element e) const { return weights_[slot(e)]; }

  std::span<const CoverEdge> edges() const { return edges_; }
  /// Indices into edges() of every edge touching e.
  std::span<const std::size_t> incident(Element e) const;
  /// Index of the edge joining a and b in either orientation.
  std::optional<std::size_t> find_edge(Element a, Element b) const;

 private:
  Element first_label_;
  std::vector<int> ranks_;
  std::vector<Weight> weights_;
  std::vector<CoverEdge> edges_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<std::size_t> incidence_;
};

/// Cover graph of {1..n} under divisibility: edges (x, p·x) for primes p.
CoverGraph build_divisor_cover_graph(int n, const SpfTable& spf);

/// Throws InvalidPoset if rank axioms fail (already enforced by GradedPoset).
CoverGraph build_poset_cover_graph(const GradedPoset& poset);

class NotAMatching : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Endpoint-disjoint set of cover edges.
class Matching {
 public:
  Matching() = default;

  /// Throws NotAMatching if the edge shares an endpoint with a pair already
  /// present.
  void add(const CoverEdge& edge);
  void remove(const CoverEdge& edge);

  std::span<const CoverEdge> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  Weight weight() const { return weight_; }
  bool touches(Element e) const { return used_.contains(e); }

  std::vector<CoverEdge> sorted_pairs() const;
  std::vector<Element> uppers() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.sorted_pairs() == b.sorted_pairs();
  }

 private:
  std::vector<CoverEdge> pairs_;
  std::unordered_set<Element> used_;
  Weight weight_ = 0;
};

/// Looks each (lower, upper) pair up in g. Throws NotAMatching for a pair that
/// is not a cover edge of g or that reuses an endpoint.
Matching make_matching(const CoverGraph& g,
                       std::span<const std::pair<Element, Element>> pairs);

/// Throws NotAMatching unless every pair of m is an edge of g.
void check_matching(const CoverGraph& g, const Matching& m);

/// Sum of edge weights, recomputed from the pairs.
Weight matching_weight(const Matching& m);

/// Directed arc of the orientation used to detect flat alternating cycles.
struct Arc {
  Element from = 0;
  Element to = 0;
  std::size_t edge = 0;  // index into CoverGraph::edges()
  bool matched = false;
};

/// Cover edges oriented lower -> upper, except matched edges which point
/// upper -> lower. Directed cycles are exactly the flat alternating cycles.
class OrientedGraph {
 public:
  OrientedGraph(const CoverGraph& g, const Matching& m);

  int vertex_count() const { return vertex_count_; }
  Element first_label() const { return first_label_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const std::size_t> out_arcs(Element v) const;
  std::span<const std::size_t> in_arcs(Element v) const;

 private:
  int vertex_count_;
  Element first_label_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_, out_;
  std::vector<std::size_t> in_offsets_, in_;
};

/// Some directed cycle as a closed vertex walk (first vertex not repeated),
/// or nullopt when the graph is acyclic.
std::optional<std::vector<Element>> find_directed_cycle(const OrientedGraph& g);

/// Some cycle alternating matched and unmatched edges inside two adjacent
/// ranks, or nullopt. Throws NotAMatching if m is not a matching on g.
std::optional<std::vector<Element>> find_flat_alternating_cycle(
    const CoverGraph& g, const Matching& m);

inline bool is_flat_cycle_free(const CoverGraph& g, const Matching& m) {
  return !find_flat_alternating_cycle(g, m).has_value();
}

/// "lower upper weight" per line.
void write_edge_list(std::ostream& out, const CoverGraph& g);

}  // namespace taxman

#endif  // TAXMAN_COVER_GRAPH_HPP
