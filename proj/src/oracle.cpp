#include "taxman/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>

namespace taxman {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

// Optimal play over an abstract arena of up to 64 elements: element i scores
// weight[i] and taxes every element in below[i].
class MaskSolver {
 public:
  MaskSolver(std::vector<Weight> weights, std::vector<Mask> below)
      : weights_(std::move(weights)), below_(std::move(below)) {
    order_.resize(weights_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return weights_[a] > weights_[b]; });
  }

  Weight value(Mask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    bool any = false;
    Weight best = std::numeric_limits<Weight>::min();
    for (int i : order_) {
      if (!(mask & bit(i)) || !(below_[i] & mask)) continue;
      const Mask child = mask & ~bit(i) & ~below_[i];
      if (any && weights_[i] + optimistic(child) <= best) continue;
      const Weight v = weights_[i] + value(child);
      if (!any || v > best) best = v;
      any = true;
    }
    if (!any) best = 0;
    memo_.emplace(mask, best);
    return best;
  }

  std::vector<int> witness(Mask mask) {
    std::vector<int> line;
    for (;;) {
      const Weight target = value(mask);
      int chosen = -1;
      for (int i : order_) {
        if (!(mask & bit(i)) || !(below_[i] & mask)) continue;
        const Mask child = mask & ~bit(i) & ~below_[i];
        if (weights_[i] + value(child) == target) {
          chosen = i;
          break;
        }
      }
      if (chosen < 0) return line;
      line.push_back(chosen);
      mask = mask & ~bit(chosen) & ~below_[chosen];
    }
  }

 private:
  // Admissible bound: every positive-weight element that could still be
  // picked is picked.
  Weight optimistic(Mask mask) const {
    Weight sum = 0;
    for (Mask m = mask; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      if ((below_[i] & mask) && weights_[i] > 0) sum += weights_[i];
    }
    return sum;
  }

  std::vector<Weight> weights_;
  std::vector<Mask> below_;
  std::vector<int> order_;
  std::unordered_map<Mask, Weight> memo_;
};

MaskSolver standard_solver(int n) {
  std::vector<Weight> weights(n);
  std::vector<Mask> below(n, 0);
  for (int k = 1; k <= n; ++k) {
    weights[k - 1] = k;
    for (int m = 2 * k; m <= n; m += k) below[m - 1] |= bit(k - 1);
  }
  return MaskSolver(std::move(weights), std::move(below));
}

MaskSolver poset_solver(const GradedPoset& poset) {
  const int size = poset.size();
  std::vector<Weight> weights(size);
  std::vector<Mask> below(size, 0);
  for (int a = 0; a < size; ++a) {
    weights[a] = poset.weight(a);
    for (int b = 0; b < size; ++b) {
      if (poset.less(b, a)) below[a] |= bit(b);
    }
  }
  return MaskSolver(std::move(weights), std::move(below));
}

void check_cap(int size, int cap) {
  if (size > cap || size > 64) {
    throw OracleInfeasible("exact search over " + std::to_string(size) +
                           " elements exceeds the cap of " + std::to_string(cap));
  }
}

Mask full_mask(int size) { return size == 64 ? ~Mask{0} : bit(size) - 1; }

}  // namespace

Solution optimal_score(int n, int cap) {
  if (n < 1) throw std::invalid_argument("pot size must be positive");
  check_cap(n, cap);
  MaskSolver solver = standard_solver(n);
  const Mask all = full_mask(n);
  Solution s{solver.value(all), {}};
  for (int i : solver.witness(all)) s.picks.push_back(i + 1);
  return s;
}

Solution optimal_score_general(const GradedPoset& poset, int cap) {
  check_cap(poset.size(), cap);
  MaskSolver solver = poset_solver(poset);
  const Mask all = full_mask(poset.size());
  Solution s{solver.value(all), {}};
  for (int i : solver.witness(all)) s.picks.push_back(i);
  return s;
}

Solution optimal_continuation(const GameState& state, int cap) {
  check_cap(state.size(), cap);
  if (state.finalized()) return {};
  MaskSolver solver =
      state.is_standard() ? standard_solver(state.size()) : poset_solver(*state.poset());
  Mask mask = 0;
  for (Element e : state.in_play_elements()) mask |= bit(e - state.first_label());
  Solution s{solver.value(mask), {}};
  for (int i : solver.witness(mask)) s.picks.push_back(i + state.first_label());
  return s;
}

Matching max_fcfree_matching_bruteforce(const CoverGraph& g, std::size_t max_edges) {
  if (g.edges().size() > max_edges) {
    throw InstanceTooLarge("brute force over " + std::to_string(g.edges().size()) +
                           " edges exceeds the cap of " + std::to_string(max_edges));
  }
  std::vector<CoverEdge> edges(g.edges().begin(), g.edges().end());
  std::stable_sort(edges.begin(), edges.end(),
                   [](const CoverEdge& a, const CoverEdge& b) { return a.weight > b.weight; });
  std::vector<Weight> suffix(edges.size() + 1, 0);
  for (std::size_t i = edges.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1] + std::max<Weight>(edges[i].weight, 0);
  }

  Matching current;
  Matching best;
  bool have_best = false;
  // Any subset of a flat-cycle-free matching is flat-cycle-free, so branches
  // can be cut as soon as an edge closes a cycle.
  auto search = [&](auto&& self, std::size_t idx) -> void {
    if (have_best && current.weight() + suffix[idx] <= best.weight()) return;
    if (idx == edges.size()) {
      best = current;
      have_best = true;
      return;
    }
    const CoverEdge& e = edges[idx];
    if (!current.touches(e.lower) && !current.touches(e.upper)) {
      current.add(e);
      if (is_flat_cycle_free(g, current)) self(self, idx + 1);
      current.remove(e);
    }
    self(self, idx + 1);
  };
  search(search, 0);
  return best;
}

OracleCache::OracleCache(std::filesystem::path path) : path_(std::move(path)) {
  load();
}

std::filesystem::path OracleCache::default_path() {
  if (const char* env = std::getenv("TAXMAN_ORACLE_CACHE"); env && *env) {
    return env;
  }
  std::error_code ec;
  auto dir = std::filesystem::temp_directory_path(ec);
  if (ec) dir = ".";
  return dir / "taxman-oracle.txt";
}

void OracleCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    int n = 0;
    Solution s;
    std::string picks;
    if (!(fields >> n >> s.score) || n < 1) continue;
    fields >> picks;
    std::replace(picks.begin(), picks.end(), ',', ' ');
    std::istringstream list(picks);
    for (Element p; list >> p;) s.picks.push_back(p);
    try {
      const GameState end = play_sequence(n, s.picks);
      if (end.player_score() == s.score) entries_[n] = std::move(s);
    } catch (const std::exception&) {
      // Stale or corrupted line; recomputed on demand.
    }
  }
}

void OracleCache::save() const {
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    for (const auto& [n, s] : entries_) {
      out << n << ' ' << s.score << ' ';
      for (std::size_t i = 0; i < s.picks.size(); ++i) {
        out << (i ? "," : "") << s.picks[i];
      }
      out << '\n';
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
}

std::optional<Solution> OracleCache::lookup(int n) const {
  if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  return std::nullopt;
}

void OracleCache::store(int n, const Solution& solution) {
  entries_[n] = solution;
  save();
}

Solution OracleCache::solve(int n, int cap) {
  if (auto hit = lookup(n)) return *hit;
  Solution s = optimal_score(n, cap);
  store(n, s);
  return s;
}

}  // namespace taxman
