#include <gtest/gtest.h>

#include "fermatmod/digits.hpp"
#include "fermatmod/error.hpp"
#include "oracles.hpp"

namespace fermatmod {
namespace {

TEST(DigitVector, ValueRoundTrip) {
  for (u64 v = 0; v < 125; ++v) {
    const DigitVector d = DigitVector::FromValue(5, v, 3);
    EXPECT_EQ(d.size(), 3u);
    EXPECT_EQ(d.value(), v);
    EXPECT_EQ(d[0], v % 5);
  }
  EXPECT_EQ(DigitVector(5, {1, 2}).Append(3).value(), 1u + 2 * 5 + 3 * 25);
  EXPECT_THROW(DigitVector(5, {5}), Error);
  EXPECT_THROW(DigitVector::FromValue(5, 125, 3), Error);
}

TEST(Digits, DigitFunctionIsExactDigit) {
  for (u64 p : {3ull, 5ull, 7ull, 13ull}) {
    const PrimeContext ctx(p, 4);
    for (unsigned j = 1; j <= 3; ++j) {
      for (u64 t = 0; t < ctx.totient(j + 1); ++t) {
        ASSERT_EQ(DigitG(ctx, j, t).value, oracle::ExpDigit(p, ctx.g(), t, j));
      }
    }
  }
}

TEST(Digits, SeriesReconstructsExp) {
  for (u64 p : {3ull, 5ull, 7ull, 13ull}) {
    const PrimeContext ctx(p, 4);
    for (unsigned j = 1; j <= 4; ++j) {
      for (u64 s = 0; s < ctx.totient(j); ++s) {
        const SeriesDigits series = ExpSeries(ctx, s, j);
        ASSERT_EQ(series.coefficients.size(), j);
        for (u64 c : series.coefficients) ASSERT_LT(c, p);
        ASSERT_EQ(series.Reconstruct(p, j), ctx.Exp(j, s).value);
      }
    }
  }
}

TEST(Digits, SmallnessCriterion) {
  for (u64 p : {5ull, 7ull}) {
    const PrimeContext ctx(p, 3);
    for (unsigned j = 1; j <= 3; ++j) {
      for (u64 s = 0; s < ctx.totient(j); ++s) {
        const SeriesDigits series = ExpSeries(ctx, s, j);
        bool upper_zero = true;
        for (unsigned i = 1; i < j; ++i) upper_zero = upper_zero && series.coefficients[i] == 0;
        EXPECT_EQ(ctx.Exp(j, s).value <= p, upper_zero) << "p=" << p << " j=" << j << " s=" << s;
      }
    }
  }
}

TEST(Digits, HMatchesOracle) {
  for (u64 p : {5ull, 7ull}) {
    const PrimeContext ctx(p, 3);
    for (unsigned j = 1; j <= 2; ++j) {
      for (u64 a = 0; a + 1 < p; ++a) {
        for (u64 s = 0; s + 1 < p; ++s) {
          for (u64 r = 0; r < ctx.modulus(j); ++r) {
            ASSERT_EQ(HEval(ctx, a, j, s, DigitVector::FromValue(p, r, j)).value,
                      oracle::H(p, ctx.g(), a, j, s, r));
          }
        }
      }
    }
  }
}

using Table = std::vector<std::vector<u64>>;

TEST(Digits, PublishedLevelOneTables) {
  const PrimeContext ctx(5, 2);
  const Table a0 = {{0, 3, 1, 4, 2}, {0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}, {1, 0, 4, 3, 2}};
  const Table a3 = {{3, 2, 1, 0, 4}, {2, 0, 3, 1, 4}, {4, 0, 1, 2, 3}, {3, 0, 2, 4, 1}};
  for (u64 s = 0; s < 4; ++s) {
    for (u64 r = 0; r < 5; ++r) {
      EXPECT_EQ(HEval(ctx, 0, 1, s, DigitVector(5, {r})).value, a0[s][r]) << s << "," << r;
      EXPECT_EQ(HEval(ctx, 3, 1, s, DigitVector(5, {r})).value, a3[s][r]) << s << "," << r;
    }
  }
}

TEST(Digits, PublishedLevelTwoTables) {
  const PrimeContext ctx(5, 3);
  const Table s3 = {{0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}, {1, 0, 4, 3, 2}, {0, 4, 3, 2, 1}, {1, 0, 4, 3, 2}};
  const Table s2 = {{0, 2, 4, 1, 3}, {2, 4, 1, 3, 0}, {0, 2, 4, 1, 3}, {0, 2, 4, 1, 3}, {0, 2, 4, 1, 3}};
  for (u64 r0 = 0; r0 < 5; ++r0) {
    for (u64 r1 = 0; r1 < 5; ++r1) {
      EXPECT_EQ(HEval(ctx, 0, 2, 3, DigitVector(5, {r0, r1})).value, s3[r0][r1]);
      EXPECT_EQ(HEval(ctx, 0, 2, 2, DigitVector(5, {r0, r1})).value, s2[r0][r1]);
    }
  }
}

TEST(Digits, ErrorsOnBadArguments) {
  const PrimeContext ctx(5, 2);
  EXPECT_THROW(HEval(ctx, 0, 1, 0, DigitVector(5, {1, 2})), Error);
  EXPECT_THROW(DigitG(ctx, 2, 0), Error);
}

TEST(ShiftIdentity, ExactReadingAlwaysHolds) {
  for (u64 p : {5ull, 7ull, 13ull}) {
    const PrimeContext ctx(p, 3);
    for (unsigned j = 1; j <= 2; ++j) {
      const auto samples = FullShiftDomain(p, j);
      for (u64 a = 0; a + 1 < p; ++a) {
        const ShiftReport report = ShiftIdentityReport(ctx, a, j, samples, ShiftReading::kExact);
        EXPECT_EQ(report.agreements, report.evaluated) << "p=" << p << " a=" << a << " j=" << j;
        EXPECT_FALSE(report.first_counterexample.has_value());
      }
    }
  }
}

TEST(ShiftIdentity, DigitwiseReadingHasCounterexamples) {
  const PrimeContext ctx(5, 3);
  const auto samples = FullShiftDomain(5, 2);
  const ShiftReport report = ShiftIdentityReport(ctx, 3, 2, samples, ShiftReading::kDigitwise);
  EXPECT_EQ(report.evaluated, 100u);
  EXPECT_LT(report.agreements, report.evaluated);
  ASSERT_TRUE(report.first_counterexample.has_value());
  const auto& c = *report.first_counterexample;
  EXPECT_EQ(c.lhs, HEval(ctx, 3, 2, c.sample.s, c.sample.r).value);
  EXPECT_NE(c.lhs, c.rhs);
}

TEST(ShiftIdentity, ReadingsCoincideAtLevelOneWithoutCarry) {
  // One digit and no wrap of s + a: every reading moves r by a.
  for (ShiftReading reading : {ShiftReading::kDigitwise, ShiftReading::kWithCarries,
                               ShiftReading::kExact}) {
    const ShiftSample moved = ShiftArguments(5, 2, 1, DigitVector(5, {4}), reading);
    EXPECT_EQ(moved.s, 3u);
    EXPECT_EQ(moved.r.digits(), std::vector<u64>{1});
  }
}

}  // namespace
}  // namespace fermatmod
