#include "fermatmod/arith.hpp"

#include <array>

#include "fermatmod/error.hpp"

namespace fermatmod {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime: return "not prime";
    case ErrorKind::kNotPrimitive: return "not primitive";
    case ErrorKind::kLevelOutOfRange: return "level out of range";
    case ErrorKind::kWidthOverflow: return "width overflow";
    case ErrorKind::kNonInvertible: return "non-invertible";
    case ErrorKind::kInexactDivision: return "inexact division";
    case ErrorKind::kNonlinear: return "nonlinear";
    case ErrorKind::kZeroSlope: return "zero slope";
    case ErrorKind::kDivisibility: return "divisibility violation";
    case ErrorKind::kInvalidArgument: return "invalid argument";
  }
  return "unknown";
}

u64 Gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<u64> InvMod(u64 a, u64 m) {
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit to avoid sign juggling.
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

bool IsPrime(u64 n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : kBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kBases) {
    u64 x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> PrimeFactors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<u64> CheckedPow(u64 base, unsigned exp, u64 limit) {
  u128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc >= limit) return std::nullopt;
  }
  return static_cast<u64>(acc);
}

u64 MultiplicativeOrder(u64 a, u64 m, u64 group_order) {
  if (Gcd(a, m) != 1) throw Error(ErrorKind::kNonInvertible, "order of a non-unit");
  u64 order = group_order;
  for (u64 q : PrimeFactors(group_order)) {
    while (order % q == 0 && PowMod(a, order / q, m) == 1) order /= q;
  }
  return order;
}

}  // namespace fermatmod
