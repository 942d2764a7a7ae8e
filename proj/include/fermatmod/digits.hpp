#pragma once

// Base-p digits of the exponential g^t.
//
// For t in Z_{phi(p^(j+1))}, Exp_{j+1}(t) and Exp_j(t mod phi(p^j)) agree
// mod p^j, so their difference over p^j is a digit in Z_p: the j-th base-p
// digit of Exp_{j+1}(t). The shifted digit functions h_j^a evaluate that
// digit at the exponent index
//
//   t = s + (p - 1) * R + a * p^j   (mod phi(p^(j+1)))
//
// where s in Z_{p-1}, R = r_0 + r_1 p + ... + r_{j-1} p^(j-1) and a is the
// shift. This combination reproduces every printed h table for p = 5.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fermatmod/context.hpp"

namespace fermatmod {

// r = r_0 + r_1 p + ... + r_{j-1} p^(j-1), each r_i in Z_p.
class DigitVector {
 public:
  DigitVector() = default;
  DigitVector(u64 p, std::vector<u64> digits);

  static DigitVector FromValue(u64 p, u64 value, std::size_t length);

  u64 p() const { return p_; }
  std::size_t size() const { return digits_.size(); }
  const std::vector<u64>& digits() const { return digits_; }
  u64 operator[](std::size_t i) const { return digits_[i]; }
  u64 value() const;

  DigitVector Append(u64 digit) const;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  u64 p_ = 0;
  std::vector<u64> digits_;
};

// (Exp_{j+1}(t) - Exp_j(t mod phi(p^j))) / p^j. Needs j + 1 <= j_max.
// Throws kInexactDivision if the difference is not a multiple of p^j.
Residue DigitG(const PrimeContext& ctx, unsigned j, u64 t);

// Coefficients c_0 = Exp_1(s mod (p-1)), c_i = g_i(s mod phi(p^(i+1))).
struct SeriesDigits {
  u64 s = 0;
  std::vector<u64> coefficients;

  // sum_{i < levels} c_i p^i
  u64 Reconstruct(u64 p, std::size_t levels) const;
};

SeriesDigits ExpSeries(const PrimeContext& ctx, u64 s, unsigned levels);

// s + (p-1) R + a p^j reduced mod phi(p^(j+1)); s need not be reduced.
u64 CombinedExponent(const PrimeContext& ctx, u64 a, unsigned j, u64 s, u64 r_value);

// h_j^a(s; r_0..r_{j-1}); r must have exactly j digits.
Residue HEval(const PrimeContext& ctx, u64 a, unsigned j, u64 s, const DigitVector& r);

// How the shift a + r(s + a) is applied to the digits r when moving the
// shift into the s argument.
enum class ShiftReading {
  kDigitwise,     // each r_i + a + c taken mod p, no carries
  kWithCarries,   // R + (a + c)(1 + p + ... + p^(j-1)) as an integer mod p^j
  kExact,         // R + c + a(1 + p + ... + p^(j-1)); the identity that always holds
};

const char* ShiftReadingName(ShiftReading reading);

struct ShiftSample {
  u64 s = 0;
  DigitVector r;
};

// Every (s, r) in Z_{p-1} x Z_{p^j}.
std::vector<ShiftSample> FullShiftDomain(u64 p, unsigned j);

struct ShiftMismatch {
  ShiftSample sample;
  u64 lhs = 0;
  u64 rhs = 0;
};

struct ShiftReport {
  u64 a = 0;
  unsigned j = 0;
  ShiftReading reading = ShiftReading::kDigitwise;
  u64 evaluated = 0;
  u64 agreements = 0;
  std::optional<ShiftMismatch> first_counterexample;
};

// Compares h_j^a(s; r) with h_j^0([s+a]_{p-1}; r') where c is the carry
// (s + a - [s+a]_{p-1})/(p-1) and r' is built per `reading`.
ShiftReport ShiftIdentityReport(const PrimeContext& ctx, u64 a, unsigned j,
                             std::span<const ShiftSample> samples, ShiftReading reading);

// Shifted arguments ([s+a]_{p-1}, r') used by ShiftIdentityReport.
ShiftSample ShiftArguments(u64 p, u64 a, u64 s, const DigitVector& r, ShiftReading reading);

}  // namespace fermatmod
