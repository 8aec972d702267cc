#ifndef TAXMAN_NUMBER_THEORY_HPP
#define TAXMAN_NUMBER_THEORY_HPP

#include <cstdint>
#include <vector>

namespace taxman {

struct PrimePower {
  int prime;
  int multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Smallest-prime-factor table for 2..n_max, built with the sieve of
/// Eratosthenes. Immutable once built.
class SpfTable {
 public:
  /// Throws std::invalid_argument when n_max < 1.
  explicit SpfTable(int n_max);

  int n_max() const { return n_max_; }

  /// Smallest prime factor of k, for 2 <= k <= n_max.
  int smallest_prime_factor(int k) const {
    if (k < 2 || k > n_max_) no_prime_factor(k);
    return lookup(k);
  }

  bool is_prime(int k) const;

  /// Number of prime factors of k counted with multiplicity (the rank of k
  /// in the divisibility poset). rank_of(1) == 0.
  int rank_of(int k) const;

  /// Prime factorization with strictly increasing primes; empty for k = 1.
  std::vector<PrimePower> factorize(int k) const;

  /// Distinct primes dividing k, increasing.
  std::vector<int> distinct_prime_factors(int k) const;

 private:
  void check_range(int k) const;
  [[noreturn]] void no_prime_factor(int k) const;

  int n_max_;
  int lookup(int k) const {
    const int p = spf_[static_cast<std::size_t>(k)];
    return p == 0 ? k : p;
  }

  std::vector<std::uint16_t> spf_;  // 0 for primes; index 0 and 1 unused
};

SpfTable build_spf(int n_max);

inline int rank_of(int k, const SpfTable& table) { return table.rank_of(k); }

inline std::vector<PrimePower> factorize(int k, const SpfTable& table) {
  return table.factorize(k);
}

/// All primes <= n_max in descending order.
std::vector<int> primes_up_to(int n_max);

}  // namespace taxman

#endif  // TAXMAN_NUMBER_THEORY_HPP
