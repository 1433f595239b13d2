#pragma once

// Brute-force verification routines. Nothing in here may depend on the
// selector polynomials; every selector claim is checked against these.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "selsieve/common.hpp"

namespace selsieve::oracle {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing; product of prime^exponent is the input.
using Factorization = std::vector<PrimePower>;

// Divides by every integer 2..sqrt(m). Used only to validate the wheel.
bool naive_is_prime(std::uint64_t m);

// Divides by 2, 3 and then 6j-1, 6j+1 up to sqrt(m).
bool trial_is_prime(std::uint64_t m);

// Deterministic Miller-Rabin for the whole 64-bit range. The witness set
// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} has no common strong liar
// below 3.3e24.
bool is_prime(std::uint64_t m);

// Complete factorization of 2 <= m <= 2^63 - 1: trial division up to 10^6,
// then Pollard-Brent on the cofactor. Every returned prime is certified by
// is_prime().
Factorization factorize(std::uint64_t m);

// Number of prime factors counted with multiplicity.
std::uint32_t big_omega(std::uint64_t m);

std::uint64_t multiply_out(const Factorization& f);

// Dense primality table for 0..limit built by the classical sieve.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit,
                      std::size_t memory_budget = kDefaultMemoryBudget * 8);

  std::uint64_t limit() const { return limit_; }
  bool contains(std::uint64_t m) const {
    return m <= limit_ && composite_[m] == false;
  }
  std::uint64_t count() const { return count_; }
  std::vector<std::uint64_t> primes() const;

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
  std::vector<bool> composite_;
};

inline PrimeTable eratosthenes(std::uint64_t limit,
                               std::size_t memory_budget = kDefaultMemoryBudget * 8) {
  return PrimeTable(limit, memory_budget);
}

// pi(x) by segmented sieve; x up to 2^36.
std::uint64_t prime_count(std::uint64_t x);

}  // namespace selsieve::oracle
