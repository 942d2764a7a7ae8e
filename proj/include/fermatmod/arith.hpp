#pragma once

// Word-sized modular arithmetic. Every product goes through a 128-bit
// intermediate, so any modulus below 2^64 is safe.

#include <cstdint>
#include <optional>
#include <vector>

namespace fermatmod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 MulMod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

constexpr u64 AddMod(u64 a, u64 b, u64 m) {
  // a, b < m < 2^64
  u64 s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

constexpr u64 SubMod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

constexpr u64 PowMod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<u64> InvMod(u64 a, u64 m);

u64 Gcd(u64 a, u64 b);

// Deterministic Miller-Rabin; exact for all 64-bit inputs.
bool IsPrime(u64 n);

// Distinct prime factors in increasing order (trial division).
std::vector<u64> PrimeFactors(u64 n);

// base^exp, or nullopt if the result would reach `limit`.
std::optional<u64> CheckedPow(u64 base, unsigned exp, u64 limit = u64{1} << 63);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and the known
// group order (a multiple of the element order).
u64 MultiplicativeOrder(u64 a, u64 m, u64 group_order);

}  // namespace fermatmod
