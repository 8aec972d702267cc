#ifndef TAXMAN_BOUNDS_HPP
#define TAXMAN_BOUNDS_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "taxman/cover_graph.hpp"
#include "taxman/oracle.hpp"
#include "taxman/poset.hpp"

namespace taxman {

/// Unrestricted maximum weight matching on g (general blossom algorithm).
Matching max_weight_matching(const CoverGraph& g);

/// Weight of the maximum weight matching on the divisor cover graph of n.
/// No legal play can score more.
Weight upper_bound(int n);

/// Eades-Lin-Smyth greedy ordering: sinks go to the back, sources to the
/// front, otherwise the vertex with the largest out-degree minus in-degree
/// (smallest label on ties) goes to the front.
std::vector<Element> greedy_fas_order(const OrientedGraph& g);

/// Indices of arcs pointing backwards in `order`.
std::vector<std::size_t> feedback_arcs(const OrientedGraph& g,
                                       std::span<const Element> order);

struct LowerBound {
  Weight score = 0;
  std::vector<Element> picks;  // legal witness line scoring `score`
  Matching matching;
};

/// Starts from the maximum weight matching, drops the matched edges whose
/// arcs land in a greedy feedback arc set, then keeps dropping the lightest
/// matched edge of any surviving flat alternating cycle. The remaining
/// matching is ordered into a witness line.
LowerBound fas_lower_bound(int n);

struct BoundsReport {
  int n = 0;
  Weight lower = 0;
  Weight upper = 0;
  std::optional<Weight> optimal;
  std::vector<Element> witness;
};

/// Throws OracleInfeasible when with_oracle is set and n exceeds oracle_cap.
BoundsReport bounds_report(int n, bool with_oracle,
                           int oracle_cap = kDefaultOracleCap);

class NotBipartite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graded poset whose cover graph is the given bipartite graph: A on rank 1,
/// B on rank 0, q < p for every edge p -> q, unit weights. Element i is
/// a_vertices[i] for i < |A| and b_vertices[i - |A|] after that.
/// Throws NotBipartite for shared or repeated labels, edges that do not run
/// from A to B, and repeated edges.
GradedPoset bipartite_to_taxman(std::span<const int> a_vertices,
                                std::span<const int> b_vertices,
                                std::span<const std::pair<int, int>> edges);

}  // namespace taxman

#endif  // TAXMAN_BOUNDS_HPP
