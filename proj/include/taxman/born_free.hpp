#ifndef TAXMAN_BORN_FREE_HPP
#define TAXMAN_BORN_FREE_HPP

#include <optional>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "taxman/cover_graph.hpp"
#include "taxman/matching_bridge.hpp"
#include "taxman/number_theory.hpp"

namespace taxman {

struct BornFreeConfig {
  int n = 1;
  /// Only primes <= p_max are used; nullopt means every prime <= n.
  std::optional<int> p_max;
};

/// Greedy matching: primes descending, and for each prime p the pairs
/// (x, p·x) by descending x, keeping every pair whose endpoints are both
/// still free. The result never contains a flat alternating cycle.
Matching born_free_matching(const BornFreeConfig& cfg, const SpfTable& spf);

/// Same construction restricted to the elements for which `available` is
/// true (indexed by number, size n + 1).
Matching born_free_matching(const BornFreeConfig& cfg, const SpfTable& spf,
                            std::span<const char> available);

/// Born-free matching ordered into legal play. With an unrestricted prime
/// set, pots 7 and 13 (where the greedy matching does not win) use the known
/// winning lines 7,4,6 and 13,9,10,8,12.
OrderedPlay born_free_play(const BornFreeConfig& cfg);

/// The same play without the 7/13 substitutions.
OrderedPlay born_free_play_raw(const BornFreeConfig& cfg);

using Rational = boost::multiprecision::cpp_rational;

/// Proven lower bound on the pot fraction won by the p_max = 5 variant:
/// (1724 N² − 29188 N − 15944) / (3375 (N² + N)).
Rational analytic_lower_ratio(int n);

/// Exact player score over the pot n(n+1)/2.
Rational exact_pot_fraction(Weight score, int n);

double pot_fraction(const OrderedPlay& play, int n);

}  // namespace taxman

#endif  // TAXMAN_BORN_FREE_HPP
