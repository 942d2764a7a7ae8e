#pragma once

// The zipper system: for a shift a, the digit r_{k-1} that makes
// h_k^a(s; r_0..r_{k-1}) vanish is the root A_k^a(s; r_0..r_{k-2}) of a
// linear form in r_{k-1}. A mock solution needs the chains for shift 0 and
// shift a to pick the same digit at every level.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fermatmod/context.hpp"
#include "fermatmod/digits.hpp"
#include "fermatmod/tiles.hpp"

namespace fermatmod {

// h_j^a(s; prefix, r) == slope * (r - root)  (mod p) for every r in Z_p.
struct LinearForm {
  u64 slope = 0;
  u64 root = 0;
  u64 a = 0;
  unsigned j = 0;
  u64 s = 0;
  DigitVector prefix;

  u64 operator()(u64 r, u64 p) const { return MulMod(slope, SubMod(r % p, root, p), p); }
};

// Fits the form from r = 0 and r = 1 and verifies it at all p digits.
// Throws kZeroSlope or kNonlinear; prefix must have j - 1 digits.
LinearForm Linearize(const PrimeContext& ctx, u64 a, unsigned j, u64 s,
                     const DigitVector& prefix);

// A_j^a(s; prefix).
u64 ZipperDigit(const PrimeContext& ctx, u64 a, unsigned j, u64 s, const DigitVector& prefix);

struct S0Search {
  std::optional<u64> s0;
  std::vector<u64> slopes;      // slope of the level-j form at s, zero prefix
  std::vector<u64> mismatches;  // per candidate s0: #{s : slope(s) != Exp_1(s+a+s0)}
};

// Offset s0 with slope(s) == Exp_1(s + a + s0) for every s in Z_{p-1}.
S0Search ExtractS0(const PrimeContext& ctx, u64 a, unsigned j);

struct AShiftRow {
  u64 s = 0;
  DigitVector prefix;
  u64 lhs = 0;  // A_j^a(s; prefix)
  u64 rhs = 0;  // A_j^0([s+a]; r_i + a + c) - (a + c)
};

struct AShiftReport {
  u64 a = 0;
  unsigned j = 0;
  std::vector<AShiftRow> rows;
  u64 agreements = 0;
};

// Compares A_j^a with the digit-shifted A_j^0 on (s, prefix) samples;
// prefix digits are shifted digit-wise without carries.
AShiftReport AShiftIdentityCheck(const PrimeContext& ctx, u64 a, unsigned j,
                                 std::span<const ShiftSample> samples);

struct ZElement {
  u64 s = 0;
  DigitVector digits;

  friend bool operator==(const ZElement&, const ZElement&) = default;
};

// Z_j(a): for each s the single chain r_{k-1} = A_k^a(s; r_0..r_{k-2}).
std::vector<ZElement> ZSet(const PrimeContext& ctx, u64 a, unsigned j);

struct ZipperSolution {
  u64 a = 0;
  u64 s = 0;
  DigitVector digits;  // r_0 .. r_{level-1}
  unsigned level = 0;
  // A_{level+1}^0 - A_{level+1}^a mod p where the chains split; empty when
  // the solution reached the last level searched.
  std::optional<u64> discrepancy;

  // [s + a]_{p-1}: the exponent of the shifted coordinate.
  u64 partner_exponent(u64 p) const { return (s + a) % (p - 1); }
};

struct ZipperShiftResult {
  u64 a = 0;
  std::vector<ZipperSolution> solutions;  // ascending s, level >= 1
};

struct ZipperResult {
  u64 p = 0;
  u64 g = 0;
  unsigned n = 0;
  unsigned max_level = 0;  // n - 1
  std::vector<ZipperShiftResult> shifts;
};

// Follows both chains level by level for every s, up to level n - 1.
// Without `only_shift` every a_i = (1+2i)(p-1)/(2n) is searched. Needs
// 2n | (p - 1) (kDivisibility) and j_max >= n.
ZipperResult ZipperSolve(const PrimeContext& ctx, unsigned n,
                         std::optional<u64> only_shift = std::nullopt);

// Point (x, y) mod p^(L+1) encoded by a level-L solution:
// x = Exp(s + (p-1)R), y = Exp(s + (p-1)R + a p^L).
Point MockPoint(const PrimeContext& ctx, const ZipperSolution& solution);

// Stable key order: p, g, n, max_level, shifts[{a, solutions[{a, s,
// digits, level, discrepancy, partner_exponent}]}].
std::string ZipperJson(const ZipperResult& result);

struct HProfile {
  std::string name;        // "H1^0", "H1^a", "H2^0", "H2^a"
  unsigned level = 0;
  bool shifted = false;
  u64 a = 0;
  u64 p = 0;
  std::vector<u64> values;      // index t-1 for t in 1..p-1
  std::vector<u64> derivative;  // index t-1 for t in 1..p-2

  u64 at(u64 t) const { return values[t - 1]; }
};

// [F(t+1) - F(t)] mod p for t in 1..p-2.
std::vector<u64> DiscreteDerivative(std::span<const u64> values, u64 p);

// H1^0, H1^a, H2^0, H2^a re-indexed by t = Exp_1(s). Needs j_max >= 3.
std::vector<HProfile> HProfiles(const PrimeContext& ctx, u64 a);

// t where every profile vanishes.
std::vector<u64> CommonZeros(std::span<const HProfile> profiles);

std::string ProfileCsv(const HProfile& profile);
std::string DerivativeCsv(const HProfile& profile);

struct SemilinearitySummary {
  std::map<u64, u64> histogram;  // derivative value -> count
  u64 distinct = 0;
  u64 longest_run = 0;
  u64 run_value = 0;
};

SemilinearitySummary SemilinearityReport(const HProfile& profile);

std::string SemilinearityCsv(const SemilinearitySummary& summary);

}  // namespace fermatmod
