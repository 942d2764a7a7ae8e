#pragma once

// Fermat tiles T_n(p; j) = {(x, y) in Z_{p^j}^2 : x^n + y^n == 0 (mod p^j)}.
//
// Invertible points of a tile lie on the lines y = a * x_i^(p^(j-1)) through
// the origin, one per root x_i of x^n == -1 (mod p); the rest are pairs of
// multiples of p. Everything here is built on that decomposition and is
// checked against direct membership in the tests.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermatmod/context.hpp"

namespace fermatmod {

using Point = std::pair<u64, u64>;

// Solutions of x^n == -1 (mod p), described by exponents of g.
//
// With d = gcd(n, p - 1) there are solutions iff d | (p - 1)/2, and then
// exactly d of them: exponents a0 + i * stride, stride = (p - 1)/d. When
// 2n | (p - 1) this is a0 = (p - 1)/(2n), stride = (p - 1)/n, and
// a_i = (1 + 2i)(p - 1)/(2n).
struct RootSet {
  u64 p = 0;
  unsigned n = 0;
  bool two_n_divides = false;  // 2n | (p - 1)
  u64 a0 = 0;
  u64 stride = 0;
  std::vector<u64> exponents;  // increasing
  std::vector<u64> roots;      // g^exponents[i] mod p

  bool empty() const { return roots.empty(); }
};

RootSet RootsOfMinusOne(const PrimeContext& ctx, unsigned n);

// f(a) = a * slope mod p^j, slope = x^(p^(j-1)): the unique lift of the
// root x to an n-th root of -1 mod p^j.
struct TileComponent {
  u64 root = 0;
  u64 exponent = 0;
  unsigned level = 0;
  u64 modulus = 0;
  u64 slope = 0;

  u64 operator()(u64 a) const { return MulMod(a % modulus, slope, modulus); }
};

TileComponent MakeComponent(const PrimeContext& ctx, u64 root, u64 exponent, unsigned j);

// One component per root, in increasing exponent order. For j > 1 this
// needs p not dividing n (kInvalidArgument otherwise).
std::vector<TileComponent> TileComponents(const PrimeContext& ctx, unsigned n, unsigned j);

bool TileMembership(const PrimeContext& ctx, unsigned n, unsigned j, u64 x, u64 y);

// Every point of T_n(p; j), without duplicates. Invertible points first,
// ordered by (root exponent, a); then the pairs of multiples of p in
// lexicographic order. For j <= n those are all of (pZ_{p^(j-1)})^2; for
// j > n they are the (pu, pv) with (u, v) in T_n(p; j - n).
std::vector<Point> TilePoints(const PrimeContext& ctx, unsigned n, unsigned j);

struct BoxIntersection {
  std::vector<Point> nontrivial;  // invertible points, (root exponent, a) order
  std::vector<Point> trivial;     // subset of (0,0), (0,p), (p,0), (p,p)
};

// T_n(p; j) intersected with [0, p]^2. For j = 1 the residue p is 0, so the
// box is [0, p - 1]^2.
BoxIntersection BoxPoints(const PrimeContext& ctx, unsigned n, unsigned j);

struct ThetaRow {
  u64 p = 0;
  u64 g = 0;
  std::vector<u64> theta;  // one per root, increasing exponent
  u64 sum = 0;
  bool mirror_symmetric = false;  // theta_i == theta_{n-1-i}
  std::string error;              // non-empty when the prime was rejected
};

struct ThetaTable {
  unsigned n = 0;
  unsigned j = 0;
  std::vector<ThetaRow> rows;  // input prime order
};

// theta_i = #{a in 1..p : 0 < f_i(a) < p} for the component f_i of root x_i.
// Primes are processed concurrently; rows keep the input order.
ThetaTable ThetaStatistics(unsigned n, unsigned j, const std::vector<u64>& primes);

// Primes in [lo, hi] with 2n | (p - 1).
std::vector<u64> ThetaPrimes(unsigned n, u64 lo, u64 hi);

std::string ThetaCsv(const ThetaTable& table);

// a2 = (m * a1 + p^j) / q.
struct BoundingLine {
  std::int64_t m = 0;
  u64 q = 1;
  unsigned level = 1;

  friend bool operator==(const BoundingLine&, const BoundingLine&) = default;
};

enum class LineSide { kAbove, kBelow };

// Side of the bound on which the component points lie, fixed by checking
// the published line -23/47 for x = 9, p = 17, j = 3 against the exact
// point set (see tests).
inline constexpr LineSide kBoundingLineSide = LineSide::kAbove;

struct LineCheck {
  u64 checked = 0;
  u64 violations = 0;
  std::optional<Point> first_violation;

  bool valid() const { return violations == 0; }
};

// Checks q*f(a) >= m*a + p^j (kAbove) or <= (kBelow) for a in [a_lo, a_hi].
// The origin is skipped: it lies on every component.
LineCheck CheckBoundingLine(const TileComponent& component, const BoundingLine& line,
                            u64 a_lo, u64 a_hi, LineSide side = kBoundingLineSide);

// Majority side of the component points relative to `line`.
LineSide CalibrateLineSide(const TileComponent& component, const BoundingLine& line,
                           u64 a_lo, u64 a_hi);

struct LineSearchLimits {
  u64 q_max = 0;          // 0 means p
  std::int64_t m_abs_bound = 0;  // |m| must be < this; 0 means sqrt(p^j)
};

// Smallest q, then smallest |m|, giving a valid line
// on kBoundingLineSide over [a_lo, a_hi]. `root` must be in S_n(p).
std::optional<BoundingLine> BoundingLineSearch(const PrimeContext& ctx, unsigned n, unsigned j,
                                               u64 root, u64 a_lo, u64 a_hi,
                                               LineSearchLimits limits = {});

// C_n(z) meets N^2 in these points (brute force over [0, z]^2).
std::vector<Point> CurveLatticePoints(unsigned n, u64 z);

}  // namespace fermatmod
