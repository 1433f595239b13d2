#include "selsieve/selector.hpp"

#include <stdexcept>
#include <string>

namespace selsieve {

namespace {

void require_positive(std::uint64_t x, const char* name) {
  if (x == 0) {
    throw std::invalid_argument(std::string(name) + " must be >= 1");
  }
}

// c*k1*k2 + s1*k1 + s2*k2 with s1, s2 in {-1, +1}. The result is never
// negative for c >= 2 and k1, k2 >= 1, so adding before subtracting keeps
// every intermediate in range.
std::uint64_t bilinear(std::uint64_t c, std::uint64_t k1, std::uint64_t k2,
                       int s1, int s2) {
  require_positive(k1, "k1");
  require_positive(k2, "k2");
  std::uint64_t v = checked::mul(checked::mul(c, k1), k2);
  if (s1 > 0) v = checked::add(v, k1);
  if (s2 > 0) v = checked::add(v, k2);
  if (s1 < 0) v = checked::sub(v, k1);
  if (s2 < 0) v = checked::sub(v, k2);
  return v;
}

std::uint64_t affine(std::uint64_t c, std::uint64_t k, int sign) {
  const std::uint64_t ck = checked::mul(c, k);
  return sign > 0 ? checked::add(ck, 1) : checked::sub(ck, 1);
}

}  // namespace

std::string_view to_string(ScanMode mode) {
  return mode == ScanMode::Full ? "full" : "restricted";
}

std::uint64_t selector_k(ScanPair pair) {
  require_positive(pair.a, "a");
  require_positive(pair.b, "b");
  return bilinear(2, pair.a, pair.b, +1, +1);
}

std::uint64_t composite_m(ScanPair pair) {
  return checked::add(checked::mul(2, selector_k(pair)), 1);
}

std::uint64_t selector_k_sign_variant(std::uint64_t a, std::uint64_t b,
                                      Sign sign_a, Sign sign_b) {
  return bilinear(2, a, b, static_cast<int>(sign_a), static_cast<int>(sign_b));
}

std::uint64_t s6_value(S6Branch branch, std::uint64_t k1, std::uint64_t k2) {
  switch (branch) {
    case S6Branch::PlusPlus: return bilinear(6, k1, k2, +1, +1);
    case S6Branch::PlusMinus: return bilinear(6, k1, k2, -1, -1);
    case S6Branch::MinusA: return bilinear(6, k1, k2, -1, +1);
    case S6Branch::MinusB: return bilinear(6, k1, k2, +1, -1);
  }
  throw std::invalid_argument("unknown S6Branch");
}

std::uint64_t s4_value(S4Branch branch, std::uint64_t k1, std::uint64_t k2) {
  switch (branch) {
    case S4Branch::PlusPlus: return bilinear(4, k1, k2, +1, +1);
    case S4Branch::PlusMinus: return bilinear(4, k1, k2, -1, -1);
    case S4Branch::MinusA: return bilinear(4, k1, k2, -1, +1);
    case S4Branch::MinusB: return bilinear(4, k1, k2, +1, -1);
  }
  throw std::invalid_argument("unknown S4Branch");
}

int form_sign(S6Branch branch) {
  return branch == S6Branch::PlusPlus || branch == S6Branch::PlusMinus ? +1 : -1;
}

int form_sign(S4Branch branch) {
  return branch == S4Branch::PlusPlus || branch == S4Branch::PlusMinus ? +1 : -1;
}

std::pair<std::uint64_t, std::uint64_t> s6_factors(S6Branch branch,
                                                   std::uint64_t k1,
                                                   std::uint64_t k2) {
  switch (branch) {
    case S6Branch::PlusPlus: return {affine(6, k1, +1), affine(6, k2, +1)};
    case S6Branch::PlusMinus: return {affine(6, k1, -1), affine(6, k2, -1)};
    case S6Branch::MinusA: return {affine(6, k1, +1), affine(6, k2, -1)};
    case S6Branch::MinusB: return {affine(6, k1, -1), affine(6, k2, +1)};
  }
  throw std::invalid_argument("unknown S6Branch");
}

std::pair<std::uint64_t, std::uint64_t> s4_factors(S4Branch branch,
                                                   std::uint64_t k1,
                                                   std::uint64_t k2) {
  switch (branch) {
    case S4Branch::PlusPlus: return {affine(4, k1, +1), affine(4, k2, +1)};
    case S4Branch::PlusMinus: return {affine(4, k1, -1), affine(4, k2, -1)};
    case S4Branch::MinusA: return {affine(4, k1, +1), affine(4, k2, -1)};
    case S4Branch::MinusB: return {affine(4, k1, -1), affine(4, k2, +1)};
  }
  throw std::invalid_argument("unknown S4Branch");
}

std::uint64_t six_form(std::uint64_t n, int sign) { return affine(6, n, sign); }

std::uint64_t four_form(std::uint64_t n, int sign) { return affine(4, n, sign); }

Dispatch residue_dispatch(ScanPair pair) {
  const std::uint64_t k = selector_k(pair);
  const std::uint64_t ra = pair.a % 3;
  const std::uint64_t rb = pair.b % 3;
  if (ra == rb && ra != 1) {
    return {Dispatch::Kind::SixNPlus1, k / 3};
  }
  if ((ra == 0 && rb == 2) || (ra == 2 && rb == 0)) {
    return {Dispatch::Kind::SixNMinus1, (k + 1) / 3};
  }
  return {Dispatch::Kind::NoSelection, 0};
}

std::optional<std::uint64_t> is_form_6n3(std::uint64_t m) {
  if (m % 2 == 0) {
    throw std::invalid_argument("is_form_6n3: m must be odd");
  }
  if (m % 6 == 3) return (m - 3) / 6;
  return std::nullopt;
}

NeighborVerdict six_neighbor_check(std::uint64_t m) {
  if (m % 2 == 0 || m < 5) {
    throw std::invalid_argument("six_neighbor_check: m must be odd and >= 5");
  }
  const bool beside_multiple_of_six = m % 6 == 1 || m % 6 == 5;
  return beside_multiple_of_six ? NeighborVerdict::CandidatePrime
                                : NeighborVerdict::ExcludedComposite;
}

}  // namespace selsieve
