#include "selsieve/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace selsieve::oracle {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kTrialBound = 1'000'000;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d,
                           unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle variant of Pollard rho. Returns a non-trivial divisor of an
// odd composite n, or n on failure for this constant.
std::uint64_t brent(std::uint64_t n, std::uint64_t c) {
  const auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
  std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::uint64_t r = 1;
  constexpr std::uint64_t kBlock = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBlock) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBlock, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(std::uint64_t n, std::map<std::uint64_t, std::uint32_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (std::uint64_t c = 1; c < 64; ++c) {
    const std::uint64_t d = brent(n, c);
    if (d != n && d != 1) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
  throw std::runtime_error("factorize: Pollard-Brent failed on " +
                           std::to_string(n));
}

}  // namespace

bool naive_is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d <= m / d; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

bool trial_is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0 || m % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= m / d; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

bool is_prime(std::uint64_t m) {
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (m < 2) return false;
  for (const std::uint64_t p : kWitnesses) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (const std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(m, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t m) {
  if (m < 2 || m > (std::uint64_t{1} << 63) - 1) {
    throw std::invalid_argument("factorize: argument must be in [2, 2^63-1], got " +
                                std::to_string(m));
  }
  std::map<std::uint64_t, std::uint32_t> found;
  const auto strip = [&](std::uint64_t d) {
    while (m % d == 0) {
      m /= d;
      ++found[d];
    }
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= kTrialBound && d <= m / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (m > 1) split(m, found);

  Factorization result;
  result.reserve(found.size());
  for (const auto& [p, e] : found) {
    if (!is_prime(p)) {
      throw std::runtime_error("factorize: uncertified factor " + std::to_string(p));
    }
    result.push_back({p, e});
  }
  return result;
}

std::uint32_t big_omega(std::uint64_t m) {
  std::uint32_t total = 0;
  for (const auto& pp : factorize(m)) total += pp.exponent;
  return total;
}

std::uint64_t multiply_out(const Factorization& f) {
  std::uint64_t product = 1;
  for (const auto& pp : f) {
    for (std::uint32_t i = 0; i < pp.exponent; ++i) {
      product = checked::mul(product, pp.prime);
    }
  }
  return product;
}

PrimeTable::PrimeTable(std::uint64_t limit, std::size_t memory_budget)
    : limit_(limit) {
  if (limit == UINT64_MAX) {
    throw CapacityError("eratosthenes: limit too large");
  }
  require_capacity(static_cast<std::size_t>(limit + 1), memory_budget,
                   "eratosthenes");
  composite_.assign(limit + 1, false);
  composite_[0] = true;
  if (limit >= 1) composite_[1] = true;
  for (std::uint64_t p = 2; p <= limit / p; ++p) {
    if (composite_[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite_[q] = true;
  }
  count_ = static_cast<std::uint64_t>(
      std::count(composite_.begin(), composite_.end(), false));
}

std::vector<std::uint64_t> PrimeTable::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::uint64_t m = 2; m <= limit_; ++m) {
    if (!composite_[m]) out.push_back(m);
  }
  return out;
}

std::uint64_t prime_count(std::uint64_t x) {
  if (x > (std::uint64_t{1} << 36)) {
    throw CapacityError("prime_count: x exceeds 2^36");
  }
  if (x < 2) return 0;
  const std::uint64_t root = isqrt(x);
  const PrimeTable base(root);
  const std::vector<std::uint64_t> small = base.primes();

  constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;
  std::vector<bool> composite(kSegment);
  std::uint64_t count = 0;
  for (std::uint64_t lo = 0; lo <= x; lo += kSegment) {
    const std::uint64_t hi = std::min(x, lo + kSegment - 1);
    std::fill(composite.begin(), composite.end(), false);
    for (const std::uint64_t p : small) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t q = start; q <= hi; q += p) composite[q - lo] = true;
    }
    for (std::uint64_t m = std::max<std::uint64_t>(lo, 2); m <= hi; ++m) {
      if (!composite[m - lo]) ++count;
    }
  }
  return count;
}

}  // namespace selsieve::oracle
