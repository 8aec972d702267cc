#include "taxman/poset.hpp"

#include <numeric>

#include "taxman/number_theory.hpp"

namespace taxman {

GradedPoset::GradedPoset(int size, std::span<const Relation> relations,
                         std::vector<int> ranks, std::vector<Weight> weights)
    : size_(size), ranks_(std::move(ranks)), weights_(std::move(weights)) {
  if (size < 0) throw InvalidPoset("poset size must be non-negative");
  if (ranks_.size() != static_cast<std::size_t>(size) ||
      weights_.size() != static_cast<std::size_t>(size)) {
    throw InvalidPoset("rank and weight tables must have one entry per element");
  }
  for (int r : ranks_) {
    if (r < 0) throw InvalidPoset("ranks must be non-negative");
  }
  closure_.assign(static_cast<std::size_t>(size) * size, 0);
  for (const auto& [lo, hi] : relations) {
    if (lo < 0 || lo >= size || hi < 0 || hi >= size) {
      throw InvalidPoset("relation references an unknown element");
    }
    closure_[index(lo, hi)] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < size; ++i) {
      if (!closure_[index(i, k)]) continue;
      for (int j = 0; j < size; ++j) {
        if (closure_[index(k, j)]) closure_[index(i, j)] = 1;
      }
    }
  }
  validate();
}

void GradedPoset::validate() const {
  for (int a = 0; a < size_; ++a) {
    if (less(a, a)) {
      throw InvalidPoset("relation is cyclic at element " + std::to_string(a));
    }
    for (int b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      if (less(b, a)) throw InvalidPoset("relation is not asymmetric");
      if (ranks_[a] >= ranks_[b]) {
        throw InvalidPoset("rank must increase along the order: " +
                           std::to_string(a) + " < " + std::to_string(b));
      }
      if (covers(a, b) && ranks_[a] + 1 != ranks_[b]) {
        throw InvalidPoset("cover " + std::to_string(a) + " < " +
                           std::to_string(b) + " must step rank by one");
      }
    }
  }
}

GradedPoset GradedPoset::divisibility(int n) {
  const SpfTable spf(std::max(n, 1));
  std::vector<Relation> relations;
  std::vector<int> ranks(n);
  std::vector<Weight> weights(n);
  for (int k = 1; k <= n; ++k) {
    ranks[k - 1] = spf.rank_of(k);
    weights[k - 1] = k;
    for (int m = 2 * k; m <= n; m += k) relations.emplace_back(k - 1, m - 1);
  }
  return GradedPoset(n, relations, std::move(ranks), std::move(weights));
}

Weight GradedPoset::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

bool GradedPoset::covers(Element lower, Element upper) const {
  if (!less(lower, upper)) return false;
  for (int x = 0; x < size_; ++x) {
    if (less(lower, x) && less(x, upper)) return false;
  }
  return true;
}

std::vector<Element> GradedPoset::below(Element e) const {
  std::vector<Element> out;
  for (int x = 0; x < size_; ++x) {
    if (less(x, e)) out.push_back(x);
  }
  return out;
}

}  // namespace taxman
