#pragma once

// Multiplicity spectra and prime sieves driven by the selector polynomials.
//
// A spectrum counts, for every order number in an interval, how many scan
// pairs the selector maps onto it. Zero means the corresponding odd number
// was jumped over, i.e. it is prime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selsieve/common.hpp"
#include "selsieve/selector.hpp"

namespace selsieve {

struct SieveOptions {
  std::size_t memory_budget = kDefaultMemoryBudget;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// K(k) for k in [k_lo, k_hi] under the selector 2ab + a + b.
class SpectrumS2 {
 public:
  SpectrumS2(std::uint64_t k_lo, std::uint64_t k_hi, ScanMode mode,
             std::vector<std::uint32_t> counts);

  std::uint64_t k_lo() const { return k_lo_; }
  std::uint64_t k_hi() const { return k_hi_; }
  ScanMode mode() const { return mode_; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }

  std::uint32_t count(std::uint64_t k) const;
  // 2k + 1 is an odd prime.
  bool jumped_over(std::uint64_t k) const { return count(k) == 0; }
  std::uint64_t total_hits() const;

 private:
  std::uint64_t k_lo_;
  std::uint64_t k_hi_;
  ScanMode mode_;
  std::vector<std::uint32_t> counts_;
};

// K-(n) and K+(n) for n in [n_lo, n_hi]. K- counts the MinusA branch under
// full scan, K+ counts PlusPlus and PlusMinus under restricted scan.
class SpectrumS6 {
 public:
  SpectrumS6(std::uint64_t n_lo, std::uint64_t n_hi,
             std::vector<std::uint32_t> k_minus,
             std::vector<std::uint32_t> k_plus);

  std::uint64_t n_lo() const { return n_lo_; }
  std::uint64_t n_hi() const { return n_hi_; }
  std::uint32_t minus(std::uint64_t n) const;
  std::uint32_t plus(std::uint64_t n) const;
  bool twin(std::uint64_t n) const { return minus(n) + plus(n) == 0; }
  std::uint64_t total_hits() const;

 private:
  std::uint64_t n_lo_;
  std::uint64_t n_hi_;
  std::vector<std::uint32_t> k_minus_;
  std::vector<std::uint32_t> k_plus_;
};

// Same layout for 4n -/+ 1. Both plus branches run restricted; the two minus
// branches run restricted with the diagonal counted once, so every count is
// the number of unordered factor pairs.
using SpectrumS4 = SpectrumS6;

// Single order number k0 scanned under the restricted regime.
struct ScanBounds {
  std::uint64_t k0 = 0;
  double m1 = 0.0;  // (sqrt(1 + 2 k0) - 1) / 2
  double m2 = 0.0;  // (k0 - 1) / 3
  std::uint64_t m1_floor = 0;
  std::uint64_t m1_ceil = 0;
  std::uint64_t m2_floor = 0;
  std::uint64_t m2_ceil = 0;

  bool m1_exact() const { return m1_floor == m1_ceil; }
  // Smallest and largest a that can satisfy 2ab + a + b = k0 with b <= a.
  std::uint64_t first_a() const { return m1_floor; }
  std::uint64_t last_a() const { return m2_floor; }
};

SpectrumS2 build_s2_spectrum(std::uint64_t k_lo, std::uint64_t k_hi,
                             ScanMode mode = ScanMode::Restricted,
                             const SieveOptions& options = {});

SpectrumS6 build_s6_spectrum(std::uint64_t n_lo, std::uint64_t n_hi,
                             const SieveOptions& options = {});

SpectrumS4 build_s4_spectrum(std::uint64_t n_lo, std::uint64_t n_hi,
                             const SieveOptions& options = {});

ScanBounds scan_bounds(std::uint64_t k0);

// Every restricted pair (a >= b) with 2ab + a + b = k0, ascending in a.
std::vector<ScanPair> order_hits(std::uint64_t k0);

// Witness with the smallest divisor 2a + 1 of 2k0 + 1, normalized to a >= b.
// Empty means 2k0 + 1 is prime (or k0 = 0).
std::optional<ScanPair> is_composite_order(std::uint64_t k0);

std::vector<std::uint64_t> primes_via_s2(std::uint64_t limit,
                                         const SieveOptions& options = {});
std::vector<std::uint64_t> primes_via_s6(std::uint64_t limit,
                                         const SieveOptions& options = {});
std::vector<std::uint64_t> primes_via_s4(std::uint64_t limit,
                                         const SieveOptions& options = {});

struct BenchEntry {
  std::string method;
  double seconds = 0.0;
  std::size_t prime_count = 0;
  std::optional<std::uint64_t> total_hits;  // selector methods only
};

struct BenchReport {
  std::uint64_t limit = 0;
  std::vector<BenchEntry> entries;  // s2, s6, s4, oracle
  bool identical = false;
};

// Runs the three selector sieves and the classical sieve on the same limit.
// Throws InvariantViolation if the prime lists differ.
BenchReport bench_selector_sieves(std::uint64_t limit,
                                  const SieveOptions& options = {});

}  // namespace selsieve
