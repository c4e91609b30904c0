#pragma once

#include <cstdint>
#include <numeric>

#include "vcyc/errors.hpp"

// Overflow-checked 64-bit integer arithmetic. Everything in the library is
// exact; an overflow raises instead of wrapping.
namespace vcyc::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

/// Floor-style remainder in [0, m) for m > 0.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

}  // namespace vcyc::checked
