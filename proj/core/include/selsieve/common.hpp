#pragma once

// Shared error types, working-width checked arithmetic and capacity limits.
// Included by both the oracle and the selector side; it must stay free of
// any number-theoretic logic.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace selsieve {

// Default cap on dense interval storage, in entries.
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 28;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class UnsupportedExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A selector result disagreed with the oracle, or a proven property failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace checked {

inline std::uint64_t add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowError("64-bit overflow in " + std::to_string(x) + " + " +
                        std::to_string(y));
  }
  return r;
}

inline std::uint64_t sub(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw OverflowError("64-bit underflow in " + std::to_string(x) + " - " +
                        std::to_string(y));
  }
  return r;
}

inline std::uint64_t mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw OverflowError("64-bit overflow in " + std::to_string(x) + " * " +
                        std::to_string(y));
  }
  return r;
}

}  // namespace checked

inline void require_capacity(std::size_t entries, std::size_t budget,
                             const char* what) {
  if (entries > budget) {
    throw CapacityError(std::string(what) + ": " + std::to_string(entries) +
                        " entries exceeds memory budget of " +
                        std::to_string(budget));
  }
}

}  // namespace selsieve
