#pragma once

// Twin-prime taxonomy, higher-order primes, Fermat numbers, prime
// coordinates and interval statistics, all phrased through the selectors.

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "selsieve/common.hpp"
#include "selsieve/selector.hpp"
#include "selsieve/sieve.hpp"

namespace selsieve {

// How many of 6n - 1, 6n + 1 are prime.
enum class TwinClass { N0, N1Lower, N1Upper, N2 };

std::string_view to_string(TwinClass c);

TwinClass classify_twin(std::uint64_t n);

// Twin class for every n in an already-built spectrum.
TwinClass classify_twin(const SpectrumS6& spectrum, std::uint64_t n);

struct TwinWitness {
  std::uint64_t lower = 0;  // 6n - 1
  std::uint64_t upper = 0;  // 6n + 1
  std::uint64_t flank = 0;  // 6n + 3 = 3 (2n + 1)
  std::uint64_t flank_cofactor = 0;
};

struct TripletReport {
  std::uint64_t limit = 0;
  bool exempt_triplet_found = false;  // {3, 5, 7}
  std::vector<std::uint64_t> triplet_starts;  // p with p, p+2, p+4 prime, p > 3
  std::vector<TwinWitness> twins;

  bool ok() const { return exempt_triplet_found && triplet_starts.empty(); }
};

// Scans odd numbers up to limit using the S2 spectrum for primality.
TripletReport verify_no_triplets(std::uint64_t limit, const SieveOptions& options = {});

struct OrderClass {
  std::uint64_t m = 0;
  std::uint32_t order = 0;  // prime factors counted with multiplicity
};

OrderClass order_of(std::uint64_t m);

// Odd m <= limit expressible as a product of N factors (2a_i + 1), a_i >= 1.
// Ascending, without duplicates.
std::vector<std::uint64_t> generate_mN_hits(std::uint32_t N, std::uint64_t limit,
                                            std::size_t memory_budget = kDefaultMemoryBudget);

// Sparse exponent vector over the primes. Keys are the primes themselves;
// index_of() gives the 1-based position (2 -> 1, 3 -> 2, 5 -> 3, ...).
class PrimeCoordinates {
 public:
  PrimeCoordinates() = default;
  explicit PrimeCoordinates(std::map<std::uint64_t, std::uint32_t> exponents);

  const std::map<std::uint64_t, std::uint32_t>& exponents() const { return exponents_; }
  std::uint32_t exponent(std::uint64_t prime) const;
  bool empty() const { return exponents_.empty(); }

  // (prime index, exponent) pairs ascending.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> indexed() const;
  // Exponents for indices 1..max index, zeros included.
  std::vector<std::uint32_t> dense() const;
  // The number these coordinates describe, if it fits in 64 bits.
  std::optional<std::uint64_t> reconstruct() const;

  friend bool operator==(const PrimeCoordinates&, const PrimeCoordinates&) = default;

 private:
  std::map<std::uint64_t, std::uint32_t> exponents_;
};

// pi(p) for a prime p up to 2^36.
std::uint64_t prime_index(std::uint64_t prime);

PrimeCoordinates prime_coords(std::uint64_t n);
PrimeCoordinates coords_mul(const PrimeCoordinates& x, const PrimeCoordinates& y);
PrimeCoordinates coords_pow(const PrimeCoordinates& x, std::uint32_t e);

struct FermatReport {
  enum class Verdict { Prime, Composite };

  std::uint32_t q = 0;
  std::uint64_t r = 0;         // 2^q
  std::uint64_t target_k = 0;  // 2^(r - 1)
  std::uint64_t fermat = 0;    // F(q) = 2 target_k + 1
  Verdict verdict = Verdict::Prime;
  std::optional<ScanPair> witness;  // (min, max) with 2ab + a + b = target_k
  std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;  // (2a+1, 2b+1)
  std::uint64_t search_effort = 0;  // a-values tested
};

// Searches a = 1, 2, ... while (2a + 1)^2 <= F(q). q >= 6 does not fit.
FermatReport fermat_check(std::uint32_t q);

struct DensityStats {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> primes;
  std::size_t prime_count = 0;
  // Gaps between consecutive primes inside [lo, hi]; empty with < 2 primes.
  std::optional<std::uint64_t> min_gap;
  std::optional<std::uint64_t> max_gap;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> min_gap_pair;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> max_gap_pair;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_pairs;

  std::vector<std::uint64_t> gaps() const;
};

inline constexpr std::uint64_t kMaxDensityWidth = 10'000'000;

DensityStats density_stats(std::uint64_t lo, std::uint64_t hi);

// pi(x) / (x / ln x) with pi(x) from the S2 sieve.
double pnt_ratio(std::uint64_t x, const SieveOptions& options = {});

// Smallest prime p with n < p < 2n; for odd p also confirms that p's order
// number is jumped over by the selector.
std::uint64_t bertrand_check(std::uint64_t n);

}  // namespace selsieve
