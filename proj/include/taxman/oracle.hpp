#ifndef TAXMAN_ORACLE_HPP
#define TAXMAN_ORACLE_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "taxman/cover_graph.hpp"
#include "taxman/game.hpp"
#include "taxman/poset.hpp"

namespace taxman {

inline constexpr int kDefaultOracleCap = 20;
inline constexpr int kDefaultPosetOracleCap = 16;
inline constexpr std::size_t kDefaultBruteForceEdgeCap = 40;

class OracleInfeasible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Best achievable player score with a witness line of picks.
struct Solution {
  Weight score = 0;
  std::vector<Element> picks;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Exact optimum of the standard game on {1..n} by memoized search over the
/// set of numbers still in play. Throws OracleInfeasible when n > cap.
Solution optimal_score(int n, int cap = kDefaultOracleCap);

/// Exact optimum of the generalized game. Throws OracleInfeasible when
/// |P| > cap.
Solution optimal_score_general(const GradedPoset& poset,
                               int cap = kDefaultPosetOracleCap);

/// Best additional score obtainable from an unfinished state. The pot (or
/// poset) size must be within cap.
Solution optimal_continuation(const GameState& state, int cap = kDefaultOracleCap);

/// Heaviest flat-alternating-cycle-free matching by exhaustive search.
/// Throws InstanceTooLarge when g has more than max_edges edges.
Matching max_fcfree_matching_bruteforce(
    const CoverGraph& g, std::size_t max_edges = kDefaultBruteForceEdgeCap);

/// On-disk table of oracle results, one "n score pick1,pick2,..." line per
/// pot size. Entries are replayed on load and dropped if they do not check
/// out.
class OracleCache {
 public:
  explicit OracleCache(std::filesystem::path path);

  /// $TAXMAN_ORACLE_CACHE, else taxman-oracle.txt in the temp directory.
  static std::filesystem::path default_path();

  const std::filesystem::path& path() const { return path_; }
  std::optional<Solution> lookup(int n) const;
  void store(int n, const Solution& solution);

  /// Cached result, or a fresh computation that is then persisted.
  Solution solve(int n, int cap = kDefaultOracleCap);

 private:
  void load();
  void save() const;

  std::filesystem::path path_;
  std::map<int, Solution> entries_;
};

}  // namespace taxman

#endif  // TAXMAN_ORACLE_HPP
