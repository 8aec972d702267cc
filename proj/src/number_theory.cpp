#include "taxman/number_theory.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taxman {

SpfTable::SpfTable(int n_max) : n_max_(n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("SpfTable: n_max must be positive, got " +
                                std::to_string(n_max));
  }
  // Only composites get an entry; their smallest factor is at most
  // sqrt(n_max) < 2^16. Primes stay 0.
  spf_.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (int i = 2; std::int64_t{i} * i <= n_max; ++i) {
    if (spf_[i] != 0) continue;
    for (std::int64_t j = std::int64_t{i} * i; j <= n_max; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint16_t>(i);
    }
  }
}

void SpfTable::check_range(int k) const {
  if (k < 1 || k > n_max_) {
    throw std::out_of_range("SpfTable: " + std::to_string(k) +
                            " outside 1.." + std::to_string(n_max_));
  }
}

void SpfTable::no_prime_factor(int k) const {
  check_range(k);
  throw std::out_of_range("SpfTable: " + std::to_string(k) + " has no prime factor");
}

bool SpfTable::is_prime(int k) const {
  check_range(k);
  return k >= 2 && spf_[k] == 0;
}

int SpfTable::rank_of(int k) const {
  check_range(k);
  int rank = 0;
  while (k > 1) {
    k /= lookup(k);
    ++rank;
  }
  return rank;
}

std::vector<PrimePower> SpfTable::factorize(int k) const {
  check_range(k);
  std::vector<PrimePower> factors;
  while (k > 1) {
    const int p = lookup(k);
    int m = 0;
    while (k % p == 0) {
      k /= p;
      ++m;
    }
    factors.push_back({p, m});
  }
  return factors;
}

std::vector<int> SpfTable::distinct_prime_factors(int k) const {
  check_range(k);
  std::vector<int> primes;
  while (k > 1) {
    const int p = lookup(k);
    primes.push_back(p);
    while (k % p == 0) k /= p;
  }
  return primes;
}

SpfTable build_spf(int n_max) { return SpfTable(n_max); }

std::vector<int> primes_up_to(int n_max) {
  const SpfTable table(n_max);
  std::vector<int> primes;
  for (int k = n_max; k >= 2; --k) {
    if (table.is_prime(k)) primes.push_back(k);
  }
  return primes;
}

}  // namespace taxman
