#include <doctest.h>

#include <memory>
#include <random>

#include "support.hpp"
#include "taxman/bounds.hpp"
#include "taxman/matching_bridge.hpp"

using namespace taxman;

namespace {

std::vector<WeightedEdge> weighted_edges(const CoverGraph& g) {
  std::vector<WeightedEdge> out;
  for (const CoverEdge& e : g.edges()) {
    out.push_back({e.lower - g.first_label(), e.upper - g.first_label(), e.weight});
  }
  return out;
}

Weight mates_weight(const std::vector<int>& mates, const std::vector<WeightedEdge>& edges) {
  Weight w = 0;
  for (const WeightedEdge& e : edges) {
    if (mates[e.u] == e.v) {
      REQUIRE(mates[e.v] == e.u);
      w += e.weight;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("maximum weight matching on divisor graphs") {
  const SpfTable spf(18);
  CHECK(upper_bound(1) == 0);
  CHECK(upper_bound(2) == 2);
  CHECK(upper_bound(3) == 3);
  CHECK(upper_bound(4) == 7);
  CHECK(upper_bound(6) == 15);  // (1,5), (2,4), (3,6)
  CHECK(upper_bound(13) >= 52);
  CHECK(max_weight_matching(build_divisor_cover_graph(2, spf)).sorted_pairs() ==
        std::vector<CoverEdge>{{1, 2, 2}});
  CHECK(max_weight_matching(build_divisor_cover_graph(4, spf)).sorted_pairs() ==
        std::vector<CoverEdge>{{1, 3, 3}, {2, 4, 4}});
  for (int n = 1; n <= 18; ++n) {
    const CoverGraph g = build_divisor_cover_graph(n, spf);
    const Matching m = max_weight_matching(g);
    REQUIRE_NOTHROW(check_matching(g, m));
    REQUIRE(m.weight() == testing::brute_force_max_matching(n + 1, weighted_edges(g)));
  }
}

TEST_CASE("blossom on general graphs") {
  SUBCASE("triangle") {
    const std::vector<WeightedEdge> e{{0, 1, 5}, {1, 2, 6}, {0, 2, 7}};
    const auto mates = max_weight_matching(3, e);
    CHECK(mates_weight(mates, e) == 7);
  }
  SUBCASE("odd cycle forcing a blossom") {
    const std::vector<WeightedEdge> e{{0, 1, 8}, {0, 2, 9}, {1, 2, 10}, {2, 3, 7}, {1, 4, 5}, {3, 4, 6}};
    CHECK(mates_weight(max_weight_matching(5, e), e) == testing::brute_force_max_matching(5, e));
  }
  SUBCASE("no edges") {
    const auto mates = max_weight_matching(4, {});
    CHECK(mates == std::vector<int>(4, -1));
  }
  SUBCASE("random") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const int v = std::uniform_int_distribution<int>(1, 12)(rng);
      const double density = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
      std::bernoulli_distribution coin(density);
      std::uniform_int_distribution<int> wdist(1, trial % 2 ? 5 : 100);
      std::vector<WeightedEdge> e;
      for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
          if (coin(rng)) e.push_back({a, b, wdist(rng)});
        }
      }
      REQUIRE(mates_weight(max_weight_matching(v, e), e) == testing::brute_force_max_matching(v, e));
    }
  }
}

TEST_CASE("greedy feedback arc order") {
  SUBCASE("acyclic orientation has no feedback arcs") {
    const SpfTable spf(30);
    const CoverGraph g = build_divisor_cover_graph(30, spf);
    const OrientedGraph o(g, Matching{});
    const std::vector<Element> order = greedy_fas_order(o);
    CHECK(order.size() == 30);
    CHECK(feedback_arcs(o, order).empty());
  }
  SUBCASE("a cycle needs at least one feedback arc") {
    const SpfTable spf(15);
    const CoverGraph g = build_divisor_cover_graph(15, spf);
    const std::vector<std::pair<Element, Element>> pairs{{2, 6}, {3, 15}, {5, 10}};
    const OrientedGraph o(g, make_matching(g, pairs));
    const auto fas = feedback_arcs(o, greedy_fas_order(o));
    CHECK_FALSE(fas.empty());
    bool hits_matched = false;
    for (std::size_t i : fas) hits_matched = hits_matched || o.arcs()[i].matched;
    CHECK(hits_matched);
  }
}

TEST_CASE("feedback arc lower bound") {
  const LowerBound lb2 = fas_lower_bound(2);
  CHECK(lb2.score == 2);
  CHECK(lb2.picks == std::vector<Element>{2});
  CHECK(fas_lower_bound(1).score == 0);
  const SpfTable spf(300);
  for (int n = 1; n <= 300; n += (n < 40 ? 1 : 23)) {
    const LowerBound lb = fas_lower_bound(n);
    GameState s = GameState::standard(n);
    replay_into(s, lb.picks);
    REQUIRE(s.player_score() == lb.score);
    REQUIRE(lb.matching.weight() == lb.score);
    REQUIRE(is_flat_cycle_free(build_divisor_cover_graph(n, spf), lb.matching));
    REQUIRE(lb.score <= upper_bound(n));
  }
}

TEST_CASE("bounds report") {
  const BoundsReport r4 = bounds_report(4, true);
  CHECK(r4.lower == 7);
  CHECK(r4.upper == 7);
  CHECK(r4.optimal == 7);
  const BoundsReport r13 = bounds_report(13, true);
  CHECK(r13.optimal.value() >= 52);
  const BoundsReport r100 = bounds_report(100, false);
  CHECK_FALSE(r100.optimal.has_value());
  CHECK(r100.lower <= r100.upper);
  CHECK_THROWS_AS(bounds_report(30, true, 20), OracleInfeasible);
  for (int n = 1; n <= 24; ++n) {
    const BoundsReport r = bounds_report(n, true, 24);
    REQUIRE(r.lower <= *r.optimal);
    REQUIRE(*r.optimal <= r.upper);
  }
}

TEST_CASE("bipartite reduction") {
  SUBCASE("empty graph") {
    const std::vector<int> a{1, 2}, b{3};
    const std::vector<std::pair<int, int>> e;
    auto p = std::make_shared<const GradedPoset>(bipartite_to_taxman(a, b, e));
    CHECK(p->size() == 3);
    CHECK_FALSE(GameState::on_poset(p).has_legal_pick());
    CHECK(optimal_score_general(*p).score == 0);
  }
  SUBCASE("single edge") {
    const std::vector<int> a{1}, b{2};
    const std::vector<std::pair<int, int>> e{{1, 2}};
    const GradedPoset p = bipartite_to_taxman(a, b, e);
    CHECK(p.less(1, 0));
    CHECK(p.rank(0) == 1);
    CHECK(p.rank(1) == 0);
    const Solution s = optimal_score_general(p);
    CHECK(s.score == 1);
    CHECK(s.picks == std::vector<Element>{0});
  }
  SUBCASE("four-cycle") {
    const std::vector<int> a{1, 2}, b{3, 4};
    const std::vector<std::pair<int, int>> e{{1, 3}, {1, 4}, {2, 3}, {2, 4}};
    const GradedPoset p = bipartite_to_taxman(a, b, e);
    CHECK(optimal_score_general(p).score == 1);
    const CoverGraph g = build_poset_cover_graph(p);
    CHECK(g.edges().size() == 4);
    CHECK(max_fcfree_matching_bruteforce(g).size() == 1);
  }
  SUBCASE("rejections") {
    const std::vector<int> a{1, 2}, b{2, 3}, b_ok{3, 4};
    const std::vector<std::pair<int, int>> none;
    CHECK_THROWS_AS(bipartite_to_taxman(a, b, none), NotBipartite);
    const std::vector<int> dup{1, 1};
    CHECK_THROWS_AS(bipartite_to_taxman(dup, b_ok, none), NotBipartite);
    const std::vector<std::pair<int, int>> backwards{{3, 1}};
    CHECK_THROWS_AS(bipartite_to_taxman(a, b_ok, backwards), NotBipartite);
    const std::vector<std::pair<int, int>> inside{{1, 2}};
    CHECK_THROWS_AS(bipartite_to_taxman(a, b_ok, inside), NotBipartite);
    const std::vector<std::pair<int, int>> repeated{{1, 3}, {1, 3}};
    CHECK_THROWS_AS(bipartite_to_taxman(a, b_ok, repeated), NotBipartite);
    const std::vector<std::pair<int, int>> unknown{{1, 9}};
    CHECK_THROWS_AS(bipartite_to_taxman(a, b_ok, unknown), NotBipartite);
  }
}
