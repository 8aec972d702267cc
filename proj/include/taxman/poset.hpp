#ifndef TAXMAN_POSET_HPP
#define TAXMAN_POSET_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taxman/types.hpp"

namespace taxman {

class InvalidPoset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (lower, upper): lower < upper.
using Relation = std::pair<Element, Element>;

/// A finite strict partial order on elements 0..size-1 with a rank function
/// and integer weights. The strict order is stored as its transitive closure;
/// covers are derived from it on demand.
///
/// Closure is an adjacency matrix, so instances are meant to stay small
/// (hundreds of elements).
class GradedPoset {
 public:
  /// Builds the transitive closure of `relations` and validates the strict
  /// order and rank axioms. Throws InvalidPoset on any violation.
  GradedPoset(int size, std::span<const Relation> relations,
              std::vector<int> ranks, std::vector<Weight> weights);

  /// {1..n} under strict divisibility, ranked by prime-factor count, with
  /// identity weights. Element i stands for the number i + 1.
  static GradedPoset divisibility(int n);

  int size() const { return size_; }
  int rank(Element e) const { return ranks_.at(e); }
  Weight weight(Element e) const { return weights_.at(e); }
  Weight total_weight() const;

  bool less(Element a, Element b) const {
    return closure_[index(a, b)] != 0;
  }

  /// lower is covered by upper: lower < upper with nothing strictly between.
  bool covers(Element lower, Element upper) const;

  /// Every element strictly below e, increasing index.
  std::vector<Element> below(Element e) const;

 private:
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(b);
  }
  void validate() const;

  int size_;
  std::vector<int> ranks_;
  std::vector<Weight> weights_;
  std::vector<char> closure_;
};

}  // namespace taxman

#endif  // TAXMAN_POSET_HPP
