#pragma once

#include <cstdint>

#include "permpat/error.hpp"

namespace permpat {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("uint64 addition overflow");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("uint64 multiplication overflow");
  return out;
}

// C(n, k); zero when k > n.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i after the multiply; divide by gcd first to stay small.
    const std::uint64_t num = n - k + i;
    std::uint64_t g = i, a = result;
    while (a != 0) { const std::uint64_t t = g % a; g = a; a = t; }
    result = checked_mul(result / g, num / (i / g));
  }
  return result;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t result = 1;
  for (unsigned i = 2; i <= n; ++i) result = checked_mul(result, i);
  return result;
}

}  // namespace permpat
