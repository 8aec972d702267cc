#include <doctest.h>

#include <random>

#include "support.hpp"
#include "taxman/number_theory.hpp"

using namespace taxman;

TEST_CASE("smallest prime factors") {
  const SpfTable t10 = build_spf(10);
  CHECK(t10.smallest_prime_factor(9) == 3);
  CHECK(t10.smallest_prime_factor(7) == 7);
  CHECK(build_spf(100).smallest_prime_factor(91) == 7);

  const SpfTable t = build_spf(5000);
  for (int k = 2; k <= 5000; ++k) {
    REQUIRE(t.smallest_prime_factor(k) == testing::trial_division_spf(k));
    const int rest = k / t.smallest_prime_factor(k);
    CHECK((rest == 1 || t.smallest_prime_factor(rest) >= t.smallest_prime_factor(k)));
    CHECK(t.is_prime(k) == (t.smallest_prime_factor(k) == k));
  }
}

TEST_CASE("sieve rejects an empty range") {
  CHECK_THROWS_AS(build_spf(0), std::invalid_argument);
  CHECK_THROWS_AS(primes_up_to(0), std::invalid_argument);
  CHECK_NOTHROW(build_spf(1));
}

TEST_CASE("rank is the prime factor count") {
  const SpfTable t = build_spf(1000);
  CHECK(rank_of(1, t) == 0);
  CHECK(rank_of(12, t) == 3);
  CHECK(rank_of(840, t) == testing::trial_division_omega(840));
  CHECK(rank_of(840, t) == 6);
  CHECK_THROWS_AS(rank_of(0, t), std::out_of_range);
  CHECK_THROWS_AS(rank_of(1001, t), std::out_of_range);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a * b > 1000) continue;
    CHECK(rank_of(a * b, t) == rank_of(a, t) + rank_of(b, t));
  }
}

TEST_CASE("factorization") {
  const SpfTable t = build_spf(10000);
  CHECK(factorize(1, t).empty());
  CHECK(factorize(60, t) == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factorize(97, t) == std::vector<PrimePower>{{97, 1}});
  CHECK_THROWS_AS(factorize(10001, t), std::out_of_range);

  for (int k = 1; k <= 10000; ++k) {
    long long product = 1;
    int last = 1;
    for (const auto& [p, m] : factorize(k, t)) {
      REQUIRE(p > last);
      last = p;
      for (int i = 0; i < m; ++i) product *= p;
    }
    REQUIRE(product == k);
  }
}

TEST_CASE("primes descending") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(10) == std::vector<int>{7, 5, 3, 2});
  std::vector<int> expected;
  for (int k = 30; k >= 2; --k) {
    if (testing::trial_division_is_prime(k)) expected.push_back(k);
  }
  CHECK(primes_up_to(30) == expected);
  CHECK(primes_up_to(30) == std::vector<int>{29, 23, 19, 17, 13, 11, 7, 5, 3, 2});
}
