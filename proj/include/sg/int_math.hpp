#ifndef SG_INT_MATH_HPP
#define SG_INT_MATH_HPP

// Exact integer helpers. Every ceiling of an expression involving a square
// root goes through ceil_sqrt_ratio so that perfect squares are never
// misjudged by rounding.

#include <cstdint>

namespace sg::intmath {

using u128 = unsigned __int128;
using i128 = __int128;

/// floor(sqrt(x)) by monotone binary search over the full 128-bit range.
constexpr u128 isqrt(u128 x) noexcept {
  u128 lo = 0;
  u128 hi = (u128{1} << 64) - 1;  // (2^64 - 1)^2 < 2^128
  while (lo < hi) {
    const u128 mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

constexpr bool is_perfect_square(u128 x) noexcept {
  const u128 r = isqrt(x);
  return r * r == x;
}

constexpr i128 floor_div(i128 a, i128 b) noexcept {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr i128 ceil_div(i128 a, i128 b) noexcept {
  return -floor_div(-a, b);
}

/// ceil((offset + sqrt(radicand)) / denominator) for denominator > 0.
constexpr i128 ceil_sqrt_ratio(i128 offset, u128 radicand, i128 denominator) noexcept {
  const u128 root = isqrt(radicand);
  const i128 numerator = offset + static_cast<i128>(root);
  if (root * root == radicand) return ceil_div(numerator, denominator);
  // sqrt is irrational: the quotient is never an integer, and adding the
  // fractional part of the root cannot cross the next multiple.
  return floor_div(numerator, denominator) + 1;
}

constexpr std::int64_t binom2(std::int64_t p) noexcept { return p * (p - 1) / 2; }

constexpr std::uint64_t pow2(unsigned e) noexcept { return std::uint64_t{1} << e; }

}  // namespace sg::intmath

#endif
