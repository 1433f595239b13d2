#pragma once

// Selector polynomials and their factorization identities.
//
// k(a, b) = 2ab + a + b hits exactly the order numbers of odd composites,
// since 2k + 1 = (2a + 1)(2b + 1). The 6n +/- 1 and 4n +/- 1 families are
// the same construction restricted to residue classes that are closed under
// multiplication. All arithmetic is unsigned 64-bit and checked.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "selsieve/common.hpp"

namespace selsieve {

struct ScanPair {
  std::uint64_t a = 1;
  std::uint64_t b = 1;

  // Restricted orientation, a >= b.
  constexpr ScanPair normalized() const {
    return a >= b ? ScanPair{a, b} : ScanPair{b, a};
  }

  friend constexpr bool operator==(const ScanPair&, const ScanPair&) = default;
};

enum class ScanMode { Full, Restricted };

std::string_view to_string(ScanMode mode);

// 6n+1 = (6k1+1)(6k2+1) for PlusPlus, (6k1-1)(6k2-1) for PlusMinus;
// 6n-1 = (6k1+1)(6k2-1) for MinusA, (6k1-1)(6k2+1) for MinusB.
enum class S6Branch { PlusPlus, PlusMinus, MinusA, MinusB };

// Same shape with modulus 4:
// 4n+1 = (4k1+1)(4k2+1) for PlusPlus, (4k1-1)(4k2-1) for PlusMinus;
// 4n-1 = (4k1+1)(4k2-1) for MinusA, (4k1-1)(4k2+1) for MinusB.
enum class S4Branch { PlusPlus, PlusMinus, MinusA, MinusB };

enum class Sign : int { Minus = -1, Plus = 1 };

// k = 2ab + a + b.
std::uint64_t selector_k(ScanPair pair);

// m = 2k + 1 = (2a + 1)(2b + 1).
std::uint64_t composite_m(ScanPair pair);

// 2ab + sign_a * a + sign_b * b. Never negative for a, b >= 1.
std::uint64_t selector_k_sign_variant(std::uint64_t a, std::uint64_t b,
                                      Sign sign_a, Sign sign_b);

std::uint64_t s6_value(S6Branch branch, std::uint64_t k1, std::uint64_t k2);
std::uint64_t s4_value(S4Branch branch, std::uint64_t k1, std::uint64_t k2);

// +1 if the branch produces 6n+1 (resp. 4n+1) composites, -1 otherwise.
int form_sign(S6Branch branch);
int form_sign(S4Branch branch);

// The two factors whose product the branch value encodes, in (k1, k2) order.
std::pair<std::uint64_t, std::uint64_t> s6_factors(S6Branch branch,
                                                   std::uint64_t k1,
                                                   std::uint64_t k2);
std::pair<std::uint64_t, std::uint64_t> s4_factors(S4Branch branch,
                                                   std::uint64_t k1,
                                                   std::uint64_t k2);

// 6n + sign, 4n + sign with overflow checks.
std::uint64_t six_form(std::uint64_t n, int sign);
std::uint64_t four_form(std::uint64_t n, int sign);

struct Dispatch {
  enum class Kind { SixNPlus1, SixNMinus1, NoSelection };
  Kind kind = Kind::NoSelection;
  std::uint64_t n = 0;  // meaningful unless kind == NoSelection

  friend bool operator==(const Dispatch&, const Dispatch&) = default;
};

// Classifies (a, b) by (a mod 3, b mod 3). (0,0) and (2,2) land in 6n+1 with
// n = k/3; (0,2) and (2,0) land in 6n-1 with n = (k+1)/3; any residue 1
// makes 2a+1 or 2b+1 divisible by 3, so m has the form 6n+3.
Dispatch residue_dispatch(ScanPair pair);

// n with m = 6n + 3, if any.
std::optional<std::uint64_t> is_form_6n3(std::uint64_t m);

enum class NeighborVerdict { CandidatePrime, ExcludedComposite };

// For odd m >= 5: a prime must sit next to a multiple of 6.
NeighborVerdict six_neighbor_check(std::uint64_t m);

}  // namespace selsieve
