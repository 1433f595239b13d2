#include "selsieve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "selsieve/oracle.hpp"

namespace selsieve {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

std::uint64_t isqrt(u128 n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

unsigned worker_count(const SieveOptions& options, std::uint64_t outer_iterations) {
  unsigned t = options.threads != 0 ? options.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  // Not worth spawning for tiny scans.
  if (outer_iterations < 4096) t = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(outer_iterations, 1)));
}

// Runs body(k1) for k1 in [first, last]. Worker w takes k1 = first + w,
// first + w + T, ... Counters are merged with relaxed atomic adds, so the
// final counts do not depend on the split.
template <typename Body>
void parallel_outer(std::uint64_t first, std::uint64_t last, unsigned workers,
                    const Body& body) {
  if (first > last) return;
  if (workers <= 1) {
    for (std::uint64_t k1 = first;; ++k1) {
      body(k1);
      if (k1 == last) break;
    }
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([=, &body] {
      for (u128 k1 = first + w; k1 <= last; k1 += workers) {
        body(static_cast<std::uint64_t>(k1));
      }
    });
  }
}

// Adds one hit at n = slope * k2 + offset for every k2 in [1, cap] landing
// inside [lo, hi].
void accumulate_line(std::vector<std::uint32_t>& counts, std::uint64_t lo,
                     std::uint64_t hi, std::uint64_t slope, i128 offset,
                     std::uint64_t cap) {
  const i128 t_lo = static_cast<i128>(lo) - offset;
  const i128 t_hi = static_cast<i128>(hi) - offset;
  if (t_hi < static_cast<i128>(slope) || cap == 0) return;
  i128 k2_min = 1;
  if (t_lo > static_cast<i128>(slope)) {
    k2_min = (t_lo + static_cast<i128>(slope) - 1) / static_cast<i128>(slope);
  }
  const i128 k2_max = std::min<i128>(cap, t_hi / static_cast<i128>(slope));
  for (i128 k2 = k2_min; k2 <= k2_max; ++k2) {
    const auto n = static_cast<std::uint64_t>(static_cast<i128>(slope) * k2 + offset);
    std::atomic_ref<std::uint32_t>(counts[n - lo]).fetch_add(1, std::memory_order_relaxed);
  }
}

constexpr std::uint64_t kUnbounded = UINT64_MAX;

void check_interval(std::uint64_t lo, std::uint64_t hi, const char* what) {
  if (lo < 1 || lo > hi) {
    throw std::invalid_argument(std::string(what) + ": need 1 <= lo <= hi, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Keeps c * k1 + 1 inside 64 bits for every k1 the outer loops visit.
void check_slope_range(std::uint64_t hi, std::uint64_t c, const char* what) {
  if (hi > UINT64_MAX / c) {
    throw OverflowError(std::string(what) + ": upper bound " + std::to_string(hi) +
                        " exceeds the 64-bit working width");
  }
}

std::size_t interval_size(std::uint64_t lo, std::uint64_t hi, std::size_t factor,
                          const SieveOptions& options, const char* what) {
  const u128 width = static_cast<u128>(hi) - lo + 1;
  const u128 entries = width * factor;
  if (entries > options.memory_budget) {
    throw CapacityError(std::string(what) + ": interval of " +
                        std::to_string(static_cast<std::uint64_t>(width)) +
                        " order numbers exceeds memory budget of " +
                        std::to_string(options.memory_budget) + " entries");
  }
  return static_cast<std::size_t>(width);
}

template <typename Clock = std::chrono::steady_clock, typename Fn>
double time_seconds(const Fn& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SpectrumS2::SpectrumS2(std::uint64_t k_lo, std::uint64_t k_hi, ScanMode mode,
                       std::vector<std::uint32_t> counts)
    : k_lo_(k_lo), k_hi_(k_hi), mode_(mode), counts_(std::move(counts)) {}

std::uint32_t SpectrumS2::count(std::uint64_t k) const {
  if (k < k_lo_ || k > k_hi_) {
    throw std::out_of_range("SpectrumS2: k=" + std::to_string(k) + " outside [" +
                            std::to_string(k_lo_) + ", " + std::to_string(k_hi_) + "]");
  }
  return counts_[k - k_lo_];
}

std::uint64_t SpectrumS2::total_hits() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

SpectrumS6::SpectrumS6(std::uint64_t n_lo, std::uint64_t n_hi,
                       std::vector<std::uint32_t> k_minus,
                       std::vector<std::uint32_t> k_plus)
    : n_lo_(n_lo), n_hi_(n_hi), k_minus_(std::move(k_minus)), k_plus_(std::move(k_plus)) {}

std::uint32_t SpectrumS6::minus(std::uint64_t n) const {
  if (n < n_lo_ || n > n_hi_) throw std::out_of_range("SpectrumS6: n outside interval");
  return k_minus_[n - n_lo_];
}

std::uint32_t SpectrumS6::plus(std::uint64_t n) const {
  if (n < n_lo_ || n > n_hi_) throw std::out_of_range("SpectrumS6: n outside interval");
  return k_plus_[n - n_lo_];
}

std::uint64_t SpectrumS6::total_hits() const {
  return std::accumulate(k_minus_.begin(), k_minus_.end(), std::uint64_t{0}) +
         std::accumulate(k_plus_.begin(), k_plus_.end(), std::uint64_t{0});
}

SpectrumS2 build_s2_spectrum(std::uint64_t k_lo, std::uint64_t k_hi, ScanMode mode,
                             const SieveOptions& options) {
  check_interval(k_lo, k_hi, "build_s2_spectrum");
  std::vector<std::uint32_t> counts(interval_size(k_lo, k_hi, 1, options, "build_s2_spectrum"));
  if (k_hi < 4) return SpectrumS2(k_lo, k_hi, mode, std::move(counts));

  // k = (2a + 1) b + a; b = 1 gives the smallest k for each a.
  const std::uint64_t a_last = (k_hi - 1) / 3;
  // Below {M1} of k_lo even b = a cannot reach the interval.
  const std::uint64_t a_first =
      mode == ScanMode::Restricted && k_lo >= 4 ? scan_bounds(k_lo).first_a() : 1;
  const auto body = [&](std::uint64_t a) {
    const std::uint64_t cap = mode == ScanMode::Restricted ? a : kUnbounded;
    accumulate_line(counts, k_lo, k_hi, 2 * a + 1, static_cast<i128>(a), cap);
  };
  parallel_outer(std::max<std::uint64_t>(a_first, 1), a_last,
                 worker_count(options, a_last), body);
  return SpectrumS2(k_lo, k_hi, mode, std::move(counts));
}

SpectrumS6 build_s6_spectrum(std::uint64_t n_lo, std::uint64_t n_hi,
                             const SieveOptions& options) {
  check_interval(n_lo, n_hi, "build_s6_spectrum");
  check_slope_range(n_hi, 7, "build_s6_spectrum");
  const std::size_t width = interval_size(n_lo, n_hi, 2, options, "build_s6_spectrum");
  std::vector<std::uint32_t> k_minus(width);
  std::vector<std::uint32_t> k_plus(width);

  // MinusA, full scan: n = (6k1 + 1) k2 - k1, smallest at k2 = 1 is 5k1 + 1.
  const std::uint64_t minus_last = n_hi >= 6 ? (n_hi - 1) / 5 : 0;
  parallel_outer(1, minus_last, worker_count(options, minus_last), [&](std::uint64_t k1) {
    accumulate_line(k_minus, n_lo, n_hi, 6 * k1 + 1, -static_cast<i128>(k1), kUnbounded);
  });

  // PlusPlus and PlusMinus, restricted scan (k2 <= k1):
  // n = (6k1 + 1) k2 + k1 and n = (6k1 - 1) k2 - k1.
  const std::uint64_t plus_last = (n_hi + 1) / 5;
  parallel_outer(1, plus_last, worker_count(options, plus_last), [&](std::uint64_t k1) {
    accumulate_line(k_plus, n_lo, n_hi, 6 * k1 + 1, static_cast<i128>(k1), k1);
    accumulate_line(k_plus, n_lo, n_hi, 6 * k1 - 1, -static_cast<i128>(k1), k1);
  });
  return SpectrumS6(n_lo, n_hi, std::move(k_minus), std::move(k_plus));
}

SpectrumS4 build_s4_spectrum(std::uint64_t n_lo, std::uint64_t n_hi,
                             const SieveOptions& options) {
  check_interval(n_lo, n_hi, "build_s4_spectrum");
  check_slope_range(n_hi, 7, "build_s4_spectrum");
  const std::size_t width = interval_size(n_lo, n_hi, 2, options, "build_s4_spectrum");
  std::vector<std::uint32_t> k_minus(width);
  std::vector<std::uint32_t> k_plus(width);

  // Smallest values at k2 = 1: PlusMinus 3k1 - 1, MinusA 3k1 + 1.
  const std::uint64_t last = (n_hi + 1) / 3;
  parallel_outer(1, last, worker_count(options, last), [&](std::uint64_t k1) {
    const auto s1 = static_cast<i128>(k1);
    accumulate_line(k_plus, n_lo, n_hi, 4 * k1 + 1, s1, k1);
    accumulate_line(k_plus, n_lo, n_hi, 4 * k1 - 1, -s1, k1);
    accumulate_line(k_minus, n_lo, n_hi, 4 * k1 + 1, -s1, k1);
    // MinusB(x, x) == MinusA(x, x); the diagonal belongs to MinusA.
    accumulate_line(k_minus, n_lo, n_hi, 4 * k1 - 1, s1, k1 - 1);
  });
  return SpectrumS4(n_lo, n_hi, std::move(k_minus), std::move(k_plus));
}

ScanBounds scan_bounds(std::uint64_t k0) {
  if (k0 < 4) {
    throw std::invalid_argument("scan_bounds: k0 must be >= 4 (the smallest hit)");
  }
  ScanBounds sb;
  sb.k0 = k0;
  const u128 m = static_cast<u128>(k0) * 2 + 1;
  const std::uint64_t s = isqrt(m);
  sb.m1_floor = (s - 1) / 2;
  sb.m1_ceil = static_cast<u128>(s) * s == m ? sb.m1_floor : sb.m1_floor + 1;
  sb.m1 = (std::sqrt(static_cast<long double>(m)) - 1.0L) / 2.0L;
  sb.m2_floor = (k0 - 1) / 3;
  sb.m2_ceil = sb.m2_floor + ((k0 - 1) % 3 != 0 ? 1 : 0);
  sb.m2 = static_cast<double>(static_cast<long double>(k0 - 1) / 3.0L);
  return sb;
}

std::vector<ScanPair> order_hits(std::uint64_t k0) {
  std::vector<ScanPair> hits;
  if (k0 < 4) return hits;
  const ScanBounds sb = scan_bounds(k0);
  for (std::uint64_t a = std::max<std::uint64_t>(sb.first_a(), 1); a <= sb.last_a(); ++a) {
    const std::uint64_t d = 2 * a + 1;
    if ((k0 - a) % d != 0) continue;
    const std::uint64_t b = (k0 - a) / d;
    if (b >= 1 && b <= a) hits.push_back({a, b});
  }
  return hits;
}

std::optional<ScanPair> is_composite_order(std::uint64_t k0) {
  if (k0 < 1) {
    throw std::invalid_argument("is_composite_order: k0 must be >= 1");
  }
  const u128 m = static_cast<u128>(k0) * 2 + 1;
  for (std::uint64_t a = 1; a < k0; ++a) {
    const u128 d = static_cast<u128>(a) * 2 + 1;
    if (d * d > m) break;
    if ((k0 - a) % static_cast<std::uint64_t>(d) == 0) {
      const std::uint64_t b = (k0 - a) / static_cast<std::uint64_t>(d);
      return ScanPair{a, b}.normalized();
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> primes_via_s2(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw std::invalid_argument("primes_via_s2: limit must be >= 2");
  std::vector<std::uint64_t> primes{2};
  const std::uint64_t k_hi = (limit - 1) / 2;
  if (k_hi == 0) return primes;
  const SpectrumS2 spectrum = build_s2_spectrum(1, k_hi, ScanMode::Restricted, options);
  for (std::uint64_t k = 1; k <= k_hi; ++k) {
    if (spectrum.jumped_over(k)) primes.push_back(2 * k + 1);
  }
  return primes;
}

std::vector<std::uint64_t> primes_via_s6(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw std::invalid_argument("primes_via_s6: limit must be >= 2");
  std::vector<std::uint64_t> primes{2};
  if (limit >= 3) primes.push_back(3);
  if (limit < 5) return primes;
  const std::uint64_t n_hi = limit / 6 + 1;
  const SpectrumS6 spectrum = build_s6_spectrum(1, n_hi, options);
  for (std::uint64_t n = 1; n <= n_hi; ++n) {
    const std::uint64_t lower = 6 * n - 1;
    const std::uint64_t upper = 6 * n + 1;
    if (lower <= limit && spectrum.minus(n) == 0) primes.push_back(lower);
    if (upper <= limit && spectrum.plus(n) == 0) primes.push_back(upper);
  }
  return primes;
}

std::vector<std::uint64_t> primes_via_s4(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw std::invalid_argument("primes_via_s4: limit must be >= 2");
  std::vector<std::uint64_t> primes{2};
  if (limit < 3) return primes;
  const std::uint64_t n_hi = limit / 4 + 1;
  const SpectrumS4 spectrum = build_s4_spectrum(1, n_hi, options);
  for (std::uint64_t n = 1; n <= n_hi; ++n) {
    const std::uint64_t lower = 4 * n - 1;
    const std::uint64_t upper = 4 * n + 1;
    if (lower <= limit && spectrum.minus(n) == 0) primes.push_back(lower);
    if (upper <= limit && spectrum.plus(n) == 0) primes.push_back(upper);
  }
  return primes;
}

BenchReport bench_selector_sieves(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 100) throw std::invalid_argument("bench_selector_sieves: limit must be >= 100");
  BenchReport report;
  report.limit = limit;

  std::vector<std::uint64_t> s2, s6, s4, classic;
  std::uint64_t s2_hits = 0, s6_hits = 0, s4_hits = 0;

  double t = time_seconds([&] {
    s2 = primes_via_s2(limit, options);
  });
  s2_hits = build_s2_spectrum(1, std::max<std::uint64_t>((limit - 1) / 2, 1),
                              ScanMode::Restricted, options)
                .total_hits();
  report.entries.push_back({"s2", t, s2.size(), s2_hits});

  t = time_seconds([&] { s6 = primes_via_s6(limit, options); });
  s6_hits = build_s6_spectrum(1, limit / 6 + 1, options).total_hits();
  report.entries.push_back({"s6", t, s6.size(), s6_hits});

  t = time_seconds([&] { s4 = primes_via_s4(limit, options); });
  s4_hits = build_s4_spectrum(1, limit / 4 + 1, options).total_hits();
  report.entries.push_back({"s4", t, s4.size(), s4_hits});

  t = time_seconds([&] { classic = oracle::eratosthenes(limit).primes(); });
  report.entries.push_back({"oracle", t, classic.size(), std::nullopt});

  report.identical = s2 == classic && s6 == classic && s4 == classic;
  if (!report.identical) {
    throw InvariantViolation("bench_selector_sieves: prime lists differ at limit " +
                             std::to_string(limit));
  }
  return report;
}

}  // namespace selsieve
