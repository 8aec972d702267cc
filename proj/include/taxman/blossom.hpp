#ifndef TAXMAN_BLOSSOM_HPP
#define TAXMAN_BLOSSOM_HPP

#include <span>
#include <vector>

#include "taxman/types.hpp"

namespace taxman {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Weight weight = 0;
};

/// Maximum weight matching on a general undirected graph with vertices
/// 0..vertex_count-1 (Edmonds' blossom algorithm with primal-dual updates,
/// O(V³)). Integer weights only; non-positive edges are never needed.
/// Returns mate[v] (the matched neighbour) or -1.
std::vector<int> max_weight_matching(int vertex_count,
                                     std::span<const WeightedEdge> edges);

}  // namespace taxman

#endif  // TAXMAN_BLOSSOM_HPP
