// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// wall-clock limit. Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "selsieve/analysis.hpp"
#include "selsieve/oracle.hpp"
#include "selsieve/selector.hpp"
#include "selsieve/sieve.hpp"

using namespace selsieve;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (condition) return;
    if (failures_ < 5) detail_ << (failures_ ? "; " : "") << what;
    ++failures_;
  }
  void note(const std::string& text) { notes_ << (notes_.tellp() > 0 ? "; " : "") << text; }
  Verdict verdict() const {
    Verdict v;
    v.ok = failures_ == 0;
    v.detail = v.ok ? notes_.str() : std::to_string(failures_) + " mismatch(es): " + detail_.str();
    return v;
  }

 private:
  int failures_ = 0;
  std::ostringstream detail_;
  std::ostringstream notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_ms;
  std::function<Verdict()> body;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

// Lower triangles, row a = 1..10, columns b = 1..a.
constexpr std::array<std::array<std::uint64_t, 10>, 10> kOrderMatrix = {{
    {4},
    {7, 12},
    {10, 17, 24},
    {13, 22, 31, 40},
    {16, 27, 38, 49, 60},
    {19, 32, 45, 58, 71, 84},
    {22, 37, 52, 67, 82, 97, 112},
    {25, 42, 59, 76, 93, 110, 127, 144},
    {28, 47, 66, 85, 104, 123, 142, 161, 180},
    {31, 52, 73, 94, 115, 136, 157, 178, 199, 220},
}};

constexpr std::array<std::array<std::uint64_t, 10>, 10> kOddMatrix = {{
    {9},
    {15, 25},
    {21, 35, 49},
    {27, 45, 63, 81},
    {33, 55, 77, 99, 121},
    {39, 65, 91, 117, 143, 169},
    {45, 75, 105, 135, 165, 195, 225},
    {51, 85, 119, 153, 187, 221, 255, 289},
    {57, 95, 133, 171, 209, 247, 285, 323, 361},
    {63, 105, 147, 189, 231, 273, 315, 357, 399, 441},
}};

Verdict selector_matrices() {
  Check c;
  for (std::uint64_t a = 1; a <= 10; ++a) {
    for (std::uint64_t b = 1; b <= a; ++b) {
      const ScanPair p{a, b};
      c.expect(selector_k(p) == kOrderMatrix[a - 1][b - 1],
               "k(" + str(a) + "," + str(b) + ")=" + str(selector_k(p)));
      c.expect(composite_m(p) == kOddMatrix[a - 1][b - 1],
               "m(" + str(a) + "," + str(b) + ")=" + str(composite_m(p)));
    }
  }
  c.note("55 + 55 entries");
  return c.verdict();
}

Verdict small_s2_spectrum() {
  Check c;
  const std::vector<std::uint32_t> expected = {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1};
  const std::set<std::uint64_t> prime_rows = {1, 2, 3, 5, 6, 8, 9, 11, 14, 15};
  const SpectrumS2 s = build_s2_spectrum(1, 17);
  for (std::uint64_t k = 1; k <= 17; ++k) {
    c.expect(s.count(k) == expected[k - 1], "K(" + str(k) + ")=" + str(s.count(k)));
    c.expect(s.jumped_over(k) == prime_rows.contains(k), "PRIME flag at k=" + str(k));
  }
  return c.verdict();
}

struct S6Row {
  std::uint64_t k1, k2, na, ma, nb, mb;
};
struct S6MinusRow {
  std::uint64_t k1, k2, nc, mc;
};

Verdict s6_value_grid() {
  static constexpr S6Row kPlus[] = {
      {1, 1, 8, 49, 4, 25},       {2, 1, 15, 91, 9, 55},      {2, 2, 28, 169, 20, 121},
      {3, 1, 22, 133, 14, 85},    {3, 2, 41, 247, 31, 187},   {3, 3, 60, 361, 48, 289},
      {4, 1, 29, 175, 19, 115},   {4, 2, 54, 325, 42, 253},   {4, 3, 79, 475, 65, 391},
      {4, 4, 104, 625, 88, 529},  {5, 1, 36, 217, 24, 145},   {5, 2, 67, 403, 53, 319},
      {5, 3, 98, 589, 82, 493},   {5, 4, 129, 775, 111, 667}, {5, 5, 160, 961, 140, 841},
  };
  static constexpr S6MinusRow kMinus[] = {
      {1, 1, 6, 35},   {1, 2, 11, 65},  {1, 3, 16, 95},  {1, 4, 21, 125}, {1, 5, 26, 155},
      {2, 1, 13, 77},  {2, 2, 24, 143}, {2, 3, 35, 209}, {2, 4, 46, 275}, {2, 5, 57, 341},
      {3, 1, 20, 119}, {3, 2, 37, 221}, {3, 3, 54, 323}, {3, 4, 71, 425}, {3, 5, 88, 527},
      {4, 1, 27, 161}, {4, 2, 50, 299}, {4, 3, 73, 437}, {4, 4, 96, 575}, {4, 5, 119, 713},
      {5, 1, 34, 203}, {5, 2, 63, 377}, {5, 3, 92, 551}, {5, 4, 121, 725}, {5, 5, 150, 899},
  };
  Check c;
  for (const S6Row& r : kPlus) {
    const std::string at = "(" + str(r.k1) + "," + str(r.k2) + ")";
    const std::uint64_t na = s6_value(S6Branch::PlusPlus, r.k1, r.k2);
    const std::uint64_t nb = s6_value(S6Branch::PlusMinus, r.k1, r.k2);
    c.expect(na == r.na, "n_a" + at + "=" + str(na));
    c.expect(six_form(na, +1) == r.ma, "6n_a+1" + at);
    c.expect(nb == r.nb, "n_b" + at + "=" + str(nb));
    c.expect(six_form(nb, +1) == r.mb, "6n_b+1" + at);
  }
  for (const S6MinusRow& r : kMinus) {
    const std::string at = "(" + str(r.k1) + "," + str(r.k2) + ")";
    // 6k1k2 + k1 - k2 = (6k1 - 1)(6k2 + 1) branch.
    const std::uint64_t nc = s6_value(S6Branch::MinusB, r.k1, r.k2);
    c.expect(nc == r.nc, "n_c" + at + "=" + str(nc));
    c.expect(six_form(nc, -1) == r.mc, "6n_c-1" + at);
  }
  c.note("15 plus rows, 25 minus rows");
  return c.verdict();
}

Verdict s6_twin_table() {
  struct Row {
    std::uint32_t minus, plus;
    bool twin;
  };
  static constexpr Row kRows[30] = {
      {0, 0, true},  {0, 0, true},  {0, 0, true},  {0, 1, false}, {0, 0, true},
      {1, 0, false}, {0, 0, true},  {0, 1, false}, {0, 1, false}, {0, 0, true},
      {1, 0, false}, {0, 0, true},  {1, 0, false}, {0, 1, false}, {0, 1, false},
      {1, 0, false}, {0, 0, true},  {0, 0, true},  {0, 1, false}, {1, 1, false},
      {1, 0, false}, {0, 1, false}, {0, 0, true},  {1, 1, false}, {0, 0, true},
      {1, 0, false}, {1, 0, false}, {0, 1, false}, {0, 2, false}, {0, 0, true},
  };
  Check c;
  const SpectrumS6 s = build_s6_spectrum(1, 30);
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const Row& r = kRows[n - 1];
    c.expect(s.minus(n) == r.minus, "K-(" + str(n) + ")=" + str(s.minus(n)));
    c.expect(s.plus(n) == r.plus, "K+(" + str(n) + ")=" + str(s.plus(n)));
    c.expect((classify_twin(s, n) == TwinClass::N2) == r.twin, "TWIN flag at n=" + str(n));
  }
  return c.verdict();
}

Verdict spectrum_windows() {
  Check c;
  for (const auto& [m_lo, m_hi] : {std::pair<std::uint64_t, std::uint64_t>{1, 100}, {901, 1000}}) {
    const std::uint64_t k_lo = std::max<std::uint64_t>(m_lo / 2, 1);
    const std::uint64_t k_hi = (m_hi - 1) / 2;
    const SpectrumS2 s = build_s2_spectrum(k_lo, k_hi);
    std::set<std::uint64_t> selected, oracle_primes;
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
      if (s.jumped_over(k)) selected.insert(2 * k + 1);
    }
    for (std::uint64_t m = m_lo | 1; m <= m_hi; m += 2) {
      if (m >= 3 && oracle::trial_is_prime(m)) oracle_primes.insert(m);
    }
    c.expect(selected == oracle_primes, "window [" + str(m_lo) + "," + str(m_hi) + "]");
    c.note("[" + str(m_lo) + "," + str(m_hi) + "]: " + str(selected.size()) + " odd primes");
  }
  return c.verdict();
}

Verdict s2_partition_at_scale() {
  Check c;
  const std::uint64_t k_hi = 500'000;
  const SpectrumS2 s = build_s2_spectrum(1, k_hi);
  const oracle::PrimeTable table(2 * k_hi + 1);
  std::uint64_t zeros = 0;
  for (std::uint64_t k = 1; k <= k_hi; ++k) {
    c.expect(s.jumped_over(k) == table.contains(2 * k + 1), "k=" + str(k));
    zeros += s.jumped_over(k) ? 1 : 0;
  }
  c.note(str(zeros) + " jumped-over order numbers");
  return c.verdict();
}

Verdict sieves_at_scale() {
  Check c;
  const std::uint64_t limit = 1'000'000;
  const auto classic = oracle::eratosthenes(limit).primes();
  c.expect(classic.size() == 78498, "oracle count " + str(classic.size()));
  c.expect(primes_via_s2(limit) == classic, "s2 list differs");
  c.expect(primes_via_s6(limit) == classic, "s6 list differs");
  c.expect(primes_via_s4(limit) == classic, "s4 list differs");
  c.note("count " + str(classic.size()));
  return c.verdict();
}

Verdict single_order_scan() {
  Check c;
  const ScanBounds sb = scan_bounds(20000);
  c.expect(sb.m1_floor == 99, "{M1}=" + str(sb.m1_floor));
  c.expect(sb.m2_ceil == 6667, "[M2]=" + str(sb.m2_ceil));
  const auto witness = is_composite_order(20000);
  c.expect(witness.has_value() && witness->a == 1538 && witness->b == 6, "witness (1538,6)");
  const auto hits = order_hits(20000);
  c.expect(std::find(hits.begin(), hits.end(), ScanPair{1538, 6}) != hits.end(),
           "(1538,6) among restricted hits");
  const auto f = oracle::factorize(40001);
  c.expect(oracle::multiply_out(f) == 40001 && f.front().prime == 13, "40001 = 13 * 3077");
  c.expect(40001 % 3077 == 0 && 40001 / 3077 == 13, "cofactor 3077");
  return c.verdict();
}

Verdict fermat_numbers() {
  Check c;
  for (std::uint32_t q = 0; q <= 4; ++q) {
    const FermatReport r = fermat_check(q);
    c.expect(r.verdict == FermatReport::Verdict::Prime, "F(" + str(q) + ") prime");
  }
  const FermatReport r = fermat_check(5);
  c.expect(r.verdict == FermatReport::Verdict::Composite, "F(5) composite");
  c.expect(r.fermat == 4294967297ULL, "F(5) value");
  c.expect(r.factors && r.factors->first == 641 && r.factors->second == 6700417,
           "641 * 6700417");
  c.expect(r.witness && r.witness->a == 320 && r.witness->b == 3350208, "witness {320, 3350208}");
  c.note("F(5) search effort " + str(r.search_effort) + " divisors");
  return c.verdict();
}

Verdict interval_facts() {
  Check c;
  const DensityStats low = density_stats(1, 500);
  c.expect(low.prime_count == 95, "count in [1,500] " + str(low.prime_count));
  c.expect(low.max_gap == 14u, "max gap in [1,500]");
  c.expect(low.max_gap_pair == std::make_pair<std::uint64_t, std::uint64_t>(113, 127),
           "max gap pair 113 -> 127");

  const std::uint64_t top = 1'000'000'000'000ULL;
  const DensityStats high = density_stats(top - 500, top);
  c.expect(high.prime_count == 21, "count near 10^12 " + str(high.prime_count));
  const std::pair<std::uint64_t, std::uint64_t> twin{999999999959ULL, 999999999961ULL};
  c.expect(std::find(high.twin_pairs.begin(), high.twin_pairs.end(), twin) !=
               high.twin_pairs.end(),
           "twin pair (999999999959, 999999999961)");
  if (high.max_gap && high.max_gap_pair) {
    // The reference value lists the pair as 999999999847 - 999999999847 = 80, which is
    // self-identical; the gap is recorded here, not asserted.
    c.note("computed max gap near 10^12: " + str(high.max_gap_pair->second) + " - " +
           str(high.max_gap_pair->first) + " = " + str(*high.max_gap) +
           (*high.max_gap == 80 ? " (printed 80 agrees; printed pair is a typo)"
                                : " (differs from printed 80)"));
  }
  return c.verdict();
}

Verdict no_triplets() {
  Check c;
  const TripletReport r = verify_no_triplets(1'000'000);
  c.expect(r.exempt_triplet_found, "{3,5,7} present");
  c.expect(r.triplet_starts.empty(),
           "triplets found: " + str(r.triplet_starts.size()));
  c.note(str(r.twins.size()) + " twin pairs above (3,5), every flank divisible by 3");
  return c.verdict();
}

Verdict product_order_equivalence() {
  Check c;
  const std::uint64_t limit = 10'000;
  for (std::uint32_t N = 1; N <= 4; ++N) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t m = 3; m <= limit; m += 2) {
      if (oracle::big_omega(m) >= N) expected.push_back(m);
    }
    const auto hits = generate_mN_hits(N, limit);
    c.expect(hits == expected, "N=" + str(N) + ": " + str(hits.size()) + " vs " +
                                   str(expected.size()));
  }
  return c.verdict();
}

Verdict euler_polynomial() {
  Check c;
  const SpectrumS2 s = build_s2_spectrum(1, (39 * 39 + 39 + 40) / 2);
  for (std::uint64_t n = 0; n < 40; ++n) {
    const std::uint64_t p = n * n + n + 41;
    c.expect(oracle::trial_is_prime(p), str(p) + " prime");
    c.expect(s.jumped_over((p - 1) / 2), "K((" + str(p) + "-1)/2) = 0");
  }
  return c.verdict();
}

Verdict prime_coordinates() {
  Check c;
  const PrimeCoordinates c63 = prime_coords(63);
  c.expect(c63.dense() == std::vector<std::uint32_t>{0, 2, 0, 1}, "63 = (0,2,0,1)");
  const PrimeCoordinates sum = coords_mul(prime_coords(5), c63);
  c.expect(sum.dense() == std::vector<std::uint32_t>{0, 2, 1, 1}, "5*63 = (0,2,1,1)");
  c.expect(sum.reconstruct() == 315u, "5*63 reconstructs 315");
  const PrimeCoordinates sq = coords_pow(c63, 2);
  c.expect(sq.dense() == std::vector<std::uint32_t>{0, 4, 0, 2}, "63^2 = (0,4,0,2)");
  c.expect(sq == prime_coords(3969), "63^2 matches factorization of 3969");
  return c.verdict();
}

Verdict bench_sanity() {
  Check c;
  const BenchReport r = bench_selector_sieves(100'000);
  c.expect(r.identical, "prime lists differ");
  c.expect(r.entries.size() == 4, "four methods");
  std::ostringstream timings;
  for (const auto& e : r.entries) {
    c.expect(e.prime_count == 9592, e.method + " count " + str(e.prime_count));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s %.2f ms", e.method.c_str(), e.seconds * 1e3);
    timings << (timings.tellp() > 0 ? ", " : "") << buf;
  }
  c.note(timings.str());
  return c.verdict();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "selector matrices for a, b <= 10", 1, selector_matrices},
      {2, "S2 multiplicities for k = 1..17", 1, small_s2_spectrum},
      {3, "6n +/- 1 selector values on the k1, k2 <= 5 grid", 1, s6_value_grid},
      {4, "6n +/- 1 multiplicities and twin flags for n = 1..30", 10, s6_twin_table},
      {5, "K = 0 positions over m in [1,100] and [901,1000]", 10, spectrum_windows},
      {6, "K(k) = 0 iff 2k+1 prime for k <= 5e5", 10'000, s2_partition_at_scale},
      {7, "s2 = s6 = s4 = Eratosthenes at 1e6", 30'000, sieves_at_scale},
      {8, "single order number scan at k0 = 20000", 1, single_order_scan},
      {9, "Fermat numbers F(0)..F(5)", 1'000, fermat_numbers},
      {10, "prime counts and gaps in [1,500] and [1e12-500, 1e12]", 5'000, interval_facts},
      {11, "no prime triplets beyond {3,5,7} up to 1e6", 10'000, no_triplets},
      {12, "N-fold products equal Omega >= N for N <= 4 up to 1e4", 1'000,
       product_order_equivalence},
      {13, "n^2 + n + 41 order numbers jumped over for n < 40", 10, euler_polynomial},
      {14, "prime coordinates of 63, 5*63 and 63^2", 1, prime_coordinates},
      {15, "benchmark lists identical at 1e5", 5'000, bench_sanity},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      v = cr.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < cr.limit_ms;
    const bool pass = v.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] AC%02d %s (%.3f ms, limit %.0f ms)%s%s%s\n", pass ? "PASS" : "FAIL", cr.id,
                cr.title.c_str(), ms, cr.limit_ms, in_time ? "" : " TIMEOUT",
                v.detail.empty() ? "" : " -- ", v.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
