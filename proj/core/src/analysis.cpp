#include "selsieve/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "selsieve/oracle.hpp"

namespace selsieve {

std::string_view to_string(TwinClass c) {
  switch (c) {
    case TwinClass::N0: return "N0";
    case TwinClass::N1Lower: return "N1Lower";
    case TwinClass::N1Upper: return "N1Upper";
    case TwinClass::N2: return "N2";
  }
  return "?";
}

TwinClass classify_twin(const SpectrumS6& spectrum, std::uint64_t n) {
  const bool lower_prime = spectrum.minus(n) == 0;
  const bool upper_prime = spectrum.plus(n) == 0;
  if (lower_prime && upper_prime) return TwinClass::N2;
  if (lower_prime) return TwinClass::N1Lower;
  if (upper_prime) return TwinClass::N1Upper;
  return TwinClass::N0;
}

TwinClass classify_twin(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("classify_twin: n must be >= 1");
  return classify_twin(build_s6_spectrum(n, n), n);
}

TripletReport verify_no_triplets(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 10) throw std::invalid_argument("verify_no_triplets: limit must be >= 10");
  TripletReport report;
  report.limit = limit;

  const std::uint64_t k_hi = (limit - 1) / 2;
  const SpectrumS2 spectrum = build_s2_spectrum(1, k_hi, ScanMode::Restricted, options);
  const auto odd_prime = [&](std::uint64_t m) {
    return m >= 3 && m <= limit && spectrum.jumped_over((m - 1) / 2);
  };

  for (std::uint64_t p = 3; p + 2 <= limit; p += 2) {
    if (!odd_prime(p) || !odd_prime(p + 2)) continue;
    if (odd_prime(p + 4)) {
      if (p == 3) {
        report.exempt_triplet_found = true;
      } else {
        report.triplet_starts.push_back(p);
      }
    }
    if (p >= 5) {
      const std::uint64_t flank = p + 4;
      if (flank % 3 != 0) {
        throw InvariantViolation("twin (" + std::to_string(p) + ", " + std::to_string(p + 2) +
                                 ") has flank " + std::to_string(flank) +
                                 " not divisible by 3");
      }
      report.twins.push_back({p, p + 2, flank, flank / 3});
    }
  }
  return report;
}

OrderClass order_of(std::uint64_t m) {
  if (m < 3 || m % 2 == 0) {
    throw std::invalid_argument("order_of: m must be odd and >= 3, got " + std::to_string(m));
  }
  const oracle::Factorization f = oracle::factorize(m);
  if (oracle::multiply_out(f) != m) {
    throw InvariantViolation("order_of: factorization of " + std::to_string(m) +
                             " does not multiply back");
  }
  OrderClass result{m, 0};
  for (const auto& pp : f) result.order += pp.exponent;
  return result;
}

namespace {

// Marks every product of `remaining` more odd factors >= min_factor onto
// `product` that stays <= limit. Factors are non-decreasing, which is the
// generalized restricted scan.
void mark_products(std::vector<bool>& hit, std::uint64_t limit, std::uint32_t remaining,
                   std::uint64_t min_factor, std::uint64_t product) {
  if (remaining == 0) {
    hit[product / 2] = true;
    return;
  }
  for (std::uint64_t f = min_factor; f <= limit / product; f += 2) {
    // The rest of the factors are at least f each.
    std::uint64_t smallest = product;
    bool fits = true;
    for (std::uint32_t i = 0; i < remaining; ++i) {
      if (smallest > limit / f) {
        fits = false;
        break;
      }
      smallest *= f;
    }
    if (!fits) break;
    mark_products(hit, limit, remaining - 1, f, product * f);
  }
}

}  // namespace

std::vector<std::uint64_t> generate_mN_hits(std::uint32_t N, std::uint64_t limit,
                                            std::size_t memory_budget) {
  if (N < 1) throw std::invalid_argument("generate_mN_hits: N must be >= 1");
  if (limit < 3) throw std::invalid_argument("generate_mN_hits: limit must be >= 3");
  require_capacity(static_cast<std::size_t>(limit / 2 + 1), memory_budget, "generate_mN_hits");

  std::vector<bool> hit(limit / 2 + 1, false);
  mark_products(hit, limit, N, 3, 1);

  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(2 * i + 1);
  }
  return out;
}

PrimeCoordinates::PrimeCoordinates(std::map<std::uint64_t, std::uint32_t> exponents)
    : exponents_(std::move(exponents)) {
  std::erase_if(exponents_, [](const auto& kv) { return kv.second == 0; });
}

std::uint32_t PrimeCoordinates::exponent(std::uint64_t prime) const {
  const auto it = exponents_.find(prime);
  return it == exponents_.end() ? 0 : it->second;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> PrimeCoordinates::indexed() const {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  out.reserve(exponents_.size());
  for (const auto& [p, e] : exponents_) out.emplace_back(prime_index(p), e);
  return out;
}

std::vector<std::uint32_t> PrimeCoordinates::dense() const {
  if (exponents_.empty()) return {};
  const auto idx = indexed();
  std::vector<std::uint32_t> out(idx.back().first, 0);
  for (const auto& [i, e] : idx) out[i - 1] = e;
  return out;
}

std::optional<std::uint64_t> PrimeCoordinates::reconstruct() const {
  std::uint64_t value = 1;
  try {
    for (const auto& [p, e] : exponents_) {
      for (std::uint32_t i = 0; i < e; ++i) value = checked::mul(value, p);
    }
  } catch (const OverflowError&) {
    return std::nullopt;
  }
  return value;
}

std::uint64_t prime_index(std::uint64_t prime) {
  if (!oracle::is_prime(prime)) {
    throw std::invalid_argument("prime_index: " + std::to_string(prime) + " is not prime");
  }
  return oracle::prime_count(prime);
}

PrimeCoordinates prime_coords(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("prime_coords: n must be >= 1");
  std::map<std::uint64_t, std::uint32_t> exps;
  if (n > 1) {
    for (const auto& pp : oracle::factorize(n)) exps[pp.prime] = pp.exponent;
  }
  return PrimeCoordinates(std::move(exps));
}

PrimeCoordinates coords_mul(const PrimeCoordinates& x, const PrimeCoordinates& y) {
  std::map<std::uint64_t, std::uint32_t> exps = x.exponents();
  for (const auto& [p, e] : y.exponents()) {
    const std::uint64_t sum = std::uint64_t{exps[p]} + e;
    if (sum > std::numeric_limits<std::uint32_t>::max()) {
      throw OverflowError("coords_mul: exponent of " + std::to_string(p) + " overflows");
    }
    exps[p] = static_cast<std::uint32_t>(sum);
  }
  return PrimeCoordinates(std::move(exps));
}

PrimeCoordinates coords_pow(const PrimeCoordinates& x, std::uint32_t e) {
  std::map<std::uint64_t, std::uint32_t> exps;
  for (const auto& [p, n] : x.exponents()) {
    const std::uint64_t scaled = std::uint64_t{n} * e;
    if (scaled > std::numeric_limits<std::uint32_t>::max()) {
      throw OverflowError("coords_pow: exponent of " + std::to_string(p) + " overflows");
    }
    exps[p] = static_cast<std::uint32_t>(scaled);
  }
  return PrimeCoordinates(std::move(exps));
}

FermatReport fermat_check(std::uint32_t q) {
  if (q > 5) {
    throw UnsupportedExponent("fermat_check: F(" + std::to_string(q) +
                              ") exceeds the 64-bit working width (q <= 5)");
  }
  FermatReport report;
  report.q = q;
  report.r = std::uint64_t{1} << q;
  report.target_k = std::uint64_t{1} << (report.r - 1);
  report.fermat = 2 * report.target_k + 1;

  // 2ab + a + b = target_k has a solution iff 2a + 1 divides F(q).
  for (std::uint64_t a = 1; a < report.target_k; ++a) {
    const std::uint64_t d = 2 * a + 1;
    if (d > report.fermat / d) break;
    ++report.search_effort;
    if ((report.target_k - a) % d == 0) {
      const std::uint64_t b = (report.target_k - a) / d;
      report.verdict = FermatReport::Verdict::Composite;
      report.witness = ScanPair{std::min(a, b), std::max(a, b)};
      report.factors = std::make_pair(d, 2 * b + 1);
      if (composite_m({a, b}) != report.fermat) {
        throw InvariantViolation("fermat_check: witness does not rebuild F(q)");
      }
      return report;
    }
  }
  report.verdict = FermatReport::Verdict::Prime;
  return report;
}

std::vector<std::uint64_t> DensityStats::gaps() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < primes.size(); ++i) out.push_back(primes[i] - primes[i - 1]);
  return out;
}

DensityStats density_stats(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || lo > hi) {
    throw std::invalid_argument("density_stats: need 1 <= lo <= hi");
  }
  if (hi - lo > kMaxDensityWidth) {
    throw CapacityError("density_stats: interval wider than 10^7");
  }
  DensityStats s;
  s.lo = lo;
  s.hi = hi;
  for (std::uint64_t m = lo;; ++m) {
    if (oracle::is_prime(m)) s.primes.push_back(m);
    if (m == hi) break;
  }
  s.prime_count = s.primes.size();
  for (std::size_t i = 1; i < s.primes.size(); ++i) {
    const std::uint64_t p = s.primes[i - 1];
    const std::uint64_t q = s.primes[i];
    const std::uint64_t gap = q - p;
    if (!s.min_gap || gap < *s.min_gap) {
      s.min_gap = gap;
      s.min_gap_pair = std::make_pair(p, q);
    }
    if (!s.max_gap || gap > *s.max_gap) {
      s.max_gap = gap;
      s.max_gap_pair = std::make_pair(p, q);
    }
    if (gap == 2) s.twin_pairs.emplace_back(p, q);
  }
  return s;
}

double pnt_ratio(std::uint64_t x, const SieveOptions& options) {
  if (x < 100) throw std::invalid_argument("pnt_ratio: x must be >= 100");
  const auto pi = static_cast<double>(primes_via_s2(x, options).size());
  const auto xd = static_cast<double>(x);
  return pi / (xd / std::log(xd));
}

std::uint64_t bertrand_check(std::uint64_t n) {
  if (n < 2 || n > 10'000'000) {
    throw std::invalid_argument("bertrand_check: n must be in [2, 10^7]");
  }
  for (std::uint64_t p = n + 1; p < 2 * n; ++p) {
    if (!oracle::is_prime(p)) continue;
    if (p % 2 == 1 && is_composite_order((p - 1) / 2)) {
      throw InvariantViolation("bertrand_check: selector hits the order number of prime " +
                               std::to_string(p));
    }
    return p;
  }
  throw InvariantViolation("bertrand_check: no prime between " + std::to_string(n) +
                           " and " + std::to_string(2 * n));
}

}  // namespace selsieve
