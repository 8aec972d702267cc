#ifndef TAXMAN_MATCHING_BRIDGE_HPP
#define TAXMAN_MATCHING_BRIDGE_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "taxman/cover_graph.hpp"
#include "taxman/game.hpp"
#include "taxman/number_theory.hpp"
#include "taxman/poset.hpp"

namespace taxman {

class IllegalSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matching cannot be ordered into legal play, which certifies
/// that it contains a flat alternating cycle.
class FlatCycleDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A legal play together with its matching. The picks are exactly the upper
/// endpoints of the matching and the score equals the matching weight.
struct OrderedPlay {
  MoveSequence sequence;
  Matching matching;
  Weight score = 0;
};

/// Pairs every move with the highest-ranked element it taxed (largest label
/// on ties). Throws IllegalSequence if a move taxed nothing, a pair is not a
/// cover edge of g, or two moves reuse an element.
Matching sequence_to_matching(const MoveSequence& seq, const CoverGraph& g);

/// Replays `picks` on the standard pot {1..n} first. Throws IllegalSequence
/// on an illegal pick.
Matching picks_to_matching(int n, std::span<const Element> picks,
                           const CoverGraph& g);

/// Orders a flat-alternating-cycle-free matching on the divisor cover graph
/// into legal picks in O(N log N).
///
/// Rank levels (r, r+1) are handled in increasing r. Inside a level, the
/// upper endpoints form a bipartite graph with the lower endpoints (edge when
/// the quotient is prime); an upper vertex of degree one can be picked
/// without taxing any other pair's lower endpoint. Such vertices are drained
/// through a FIFO queue. Throws FlatCycleDetected if a level cannot be
/// drained.
std::vector<Element> order_matching_standard(const Matching& m,
                                             const CoverGraph& g,
                                             const SpfTable& spf);

/// Orders a matching on an explicit poset's cover graph by chasing
/// interfering pairs until one can be picked safely. Throws FlatCycleDetected
/// if the chase revisits a pair.
std::vector<Element> order_matching_general(const Matching& m,
                                            const GradedPoset& poset);

/// sequence -> matching -> sequence keeps the pick set and the score.
bool roundtrip_check(int n, std::span<const Element> picks);

}  // namespace taxman

#endif  // TAXMAN_MATCHING_BRIDGE_HPP
