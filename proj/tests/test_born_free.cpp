#include <doctest.h>

#include "support.hpp"
#include "taxman/born_free.hpp"

using namespace taxman;

namespace {

Weight pot(int n) { return static_cast<Weight>(n) * (n + 1) / 2; }

std::vector<Element> picks(const OrderedPlay& play) { return picks_of(play.sequence); }

}  // namespace

TEST_CASE("born-free matching small pots") {
  const SpfTable spf(100);
  CHECK(born_free_matching({1, std::nullopt}, spf).empty());
  CHECK(born_free_matching({2, std::nullopt}, spf).sorted_pairs() == std::vector<CoverEdge>{{1, 2, 2}});
  // 13 first claims 1, then 5 takes (2,10), 3 takes (4,12) and (3,9).
  const Matching m13 = born_free_matching({13, std::nullopt}, spf);
  CHECK(m13.sorted_pairs() ==
        std::vector<CoverEdge>{{1, 13, 13}, {2, 10, 10}, {3, 9, 9}, {4, 12, 12}});
  CHECK(m13.weight() == 44);
}

TEST_CASE("born-free matching with a prime cap") {
  const SpfTable spf(100);
  const Matching m = born_free_matching({20, 5}, spf);
  for (const CoverEdge& e : m.pairs()) CHECK(e.upper / e.lower <= 5);
  // 5 claims (4,20), (3,15), (2,10), (1,5) before any smaller prime runs.
  const std::vector<CoverEdge> pairs = m.sorted_pairs();
  for (const CoverEdge& e : std::vector<CoverEdge>{{1, 5, 5}, {2, 10, 10}, {3, 15, 15}, {4, 20, 20}}) {
    CHECK(std::find(pairs.begin(), pairs.end(), e) != pairs.end());
  }
  CHECK_FALSE(m.touches(11));
  CHECK_THROWS_AS(born_free_matching({20, 4}, spf), std::invalid_argument);
  CHECK_THROWS_AS(born_free_matching({20, 1}, spf), std::invalid_argument);
  CHECK_THROWS_AS(born_free_matching({0, std::nullopt}, spf), std::invalid_argument);
}

TEST_CASE("born-free matching restricted to available numbers") {
  const SpfTable spf(20);
  std::vector<char> avail(21, 1);
  avail[1] = 0;
  const Matching m = born_free_matching({20, std::nullopt}, spf, avail);
  CHECK_FALSE(m.touches(1));
  const CoverGraph g = build_divisor_cover_graph(20, spf);
  CHECK(is_flat_cycle_free(g, m));
}

TEST_CASE("born-free matchings are valid and cycle free") {
  const SpfTable spf(10000);
  for (int n = 1; n <= 500; ++n) {
    const CoverGraph g = build_divisor_cover_graph(n, spf);
    const Matching m = born_free_matching({n, std::nullopt}, spf);
    REQUIRE_NOTHROW(check_matching(g, m));
    REQUIRE(is_flat_cycle_free(g, m));
    REQUIRE(is_flat_cycle_free(g, born_free_matching({n, 5}, spf)));
  }
  for (int n : {1000, 4321, 10000}) {
    const CoverGraph g = build_divisor_cover_graph(n, spf);
    REQUIRE_NOTHROW(check_matching(g, born_free_matching({n, std::nullopt}, spf)));
  }
}

TEST_CASE("born-free play") {
  SUBCASE("n = 1") {
    const OrderedPlay p = born_free_play({1, std::nullopt});
    CHECK(p.sequence.empty());
    CHECK(p.score == 0);
  }
  SUBCASE("n = 2") {
    const OrderedPlay p = born_free_play({2, std::nullopt});
    CHECK(picks(p) == std::vector<Element>{2});
    CHECK(exact_pot_fraction(p.score, 2) == Rational(2, 3));
    CHECK(pot_fraction(p, 2) == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("n = 3 ties") {
    const OrderedPlay p = born_free_play({3, std::nullopt});
    CHECK(picks(p) == std::vector<Element>{3});
    CHECK(p.score == 3);
    CHECK(exact_pot_fraction(p.score, 3) == Rational(1, 2));
  }
  SUBCASE("n = 7 uses the known line") {
    const OrderedPlay p = born_free_play({7, std::nullopt});
    CHECK(picks(p) == std::vector<Element>{7, 4, 6});
    CHECK(p.score == 17);
    CHECK(born_free_play_raw({7, std::nullopt}).score * 2 < pot(7));
  }
  SUBCASE("n = 13 uses the known line") {
    const OrderedPlay p = born_free_play({13, std::nullopt});
    CHECK(picks(p) == std::vector<Element>{13, 9, 10, 8, 12});
    CHECK(p.score == 52);
    CHECK(born_free_play_raw({13, std::nullopt}).score == 44);
  }
  SUBCASE("capped play is not substituted") {
    CHECK(picks(born_free_play({7, 5})) == picks(born_free_play_raw({7, 5})));
  }
  SUBCASE("n = 1000 wins") {
    const OrderedPlay p = born_free_play({1000, std::nullopt});
    CHECK(p.score * 2 > pot(1000));
    const GameState s = play_sequence(1000, picks(p));
    CHECK(s.player_score() == p.score);
  }
}

TEST_CASE("play invariants") {
  const SpfTable spf(300);
  for (int n = 1; n <= 300; ++n) {
    for (const auto cap : {std::optional<int>{}, std::optional<int>{5}}) {
      const OrderedPlay p = born_free_play_raw({n, cap});
      REQUIRE(p.score == p.matching.weight());
      std::vector<Element> ps = picks(p);
      std::vector<Element> ups = p.matching.uppers();
      std::sort(ps.begin(), ps.end());
      std::sort(ups.begin(), ups.end());
      REQUIRE(ps == ups);
      GameState s = GameState::standard(n);
      replay_into(s, picks(p));
      REQUIRE(s.player_score() == p.score);
    }
  }
}

TEST_CASE("raw born-free wins except on 1, 3, 7, 13") {
  for (int n = 1; n <= 400; ++n) {
    const bool win = born_free_play_raw({n, std::nullopt}).score * 2 > pot(n);
    const bool expected = !(n == 1 || n == 3 || n == 7 || n == 13);
    REQUIRE_MESSAGE(win == expected, "n = " << n);
    const Weight sub = born_free_play({n, std::nullopt}).score;
    REQUIRE((n == 1 || n == 3 || sub * 2 > pot(n)));
  }
}

TEST_CASE("unrestricted dominates the p_max = 5 variant") {
  for (int n = 1; n <= 3000; n += 7) {
    REQUIRE(born_free_play_raw({n, std::nullopt}).score >= born_free_play_raw({n, 5}).score);
  }
}

TEST_CASE("analytic ratio") {
  CHECK(analytic_lower_ratio(846) < Rational(1, 2));
  CHECK(analytic_lower_ratio(847) > Rational(1, 2));
  CHECK(analytic_lower_ratio(1) == Rational(1724 - 29188 - 15944, 3375 * 2));
  for (int n = 1; n < 3000; ++n) REQUIRE(analytic_lower_ratio(n + 1) >= analytic_lower_ratio(n));
  CHECK(analytic_lower_ratio(1000000) < Rational(1724, 3375));
  for (int n = 847; n <= 1500; n += 13) {
    REQUIRE(exact_pot_fraction(born_free_play_raw({n, 5}).score, n) >= analytic_lower_ratio(n));
  }
}

TEST_CASE("pot fraction near ten thousand") {
  const double f = pot_fraction(born_free_play({10000, std::nullopt}), 10000);
  CHECK(f >= 0.568);
  CHECK(f <= 0.570);
}
