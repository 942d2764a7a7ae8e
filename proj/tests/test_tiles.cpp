#include <gtest/gtest.h>

#include <set>

#include "fermatmod/error.hpp"
#include "fermatmod/tiles.hpp"
#include "oracles.hpp"

namespace fermatmod {
namespace {

struct Case {
  u64 p;
  unsigned n;
};

// Every (p, n) with 2n | p - 1 for the small primes.
std::vector<Case> DivisibleCases() {
  std::vector<Case> out;
  for (u64 p : {5ull, 7ull, 13ull, 17ull}) {
    for (unsigned n = 2; 2 * n <= p - 1; ++n) {
      if ((p - 1) % (2 * n) == 0) out.push_back({p, n});
    }
  }
  return out;
}

TEST(Roots, MatchBruteForceForEveryExponent) {
  for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 29ull, 97ull}) {
    const PrimeContext ctx(p, 1);
    for (unsigned n = 2; n <= 20; ++n) {
      const RootSet rs = RootsOfMinusOne(ctx, n);
      EXPECT_EQ(rs.roots, oracle::RootsOfMinusOne(p, ctx.g(), n)) << "p=" << p << " n=" << n;
      for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        EXPECT_EQ(ctx.Exp(1, rs.exponents[i]).value, rs.roots[i]);
      }
      EXPECT_EQ(rs.two_n_divides, (p - 1) % (2 * n) == 0);
    }
  }
}

TEST(Roots, ClosedFormWhenTwoNDivides) {
  for (const auto& [p, n] : DivisibleCases()) {
    const RootSet rs = RootsOfMinusOne(PrimeContext(p, 1), n);
    ASSERT_EQ(rs.exponents.size(), n);
    for (unsigned i = 0; i < n; ++i) EXPECT_EQ(rs.exponents[i], (1 + 2 * i) * (p - 1) / (2 * n));
  }
}

TEST(Roots, Examples) {
  EXPECT_EQ(RootsOfMinusOne(PrimeContext(17, 1), 4).roots, (std::vector<u64>{9, 15, 8, 2}));
  EXPECT_EQ(RootsOfMinusOne(PrimeContext(5, 1), 2).roots, (std::vector<u64>{2, 3}));
  // n = 3 is odd, so x = -1 always works.
  EXPECT_EQ(RootsOfMinusOne(PrimeContext(5, 1), 3).roots, (std::vector<u64>{4}));
  EXPECT_TRUE(RootsOfMinusOne(PrimeContext(7, 1), 2).empty());
  EXPECT_THROW(RootsOfMinusOne(PrimeContext(7, 1), 1), Error);
}

TEST(Tiles, ExampleMembership) {
  const PrimeContext ctx(5, 2);
  const auto points = TilePoints(ctx, 2, 2);
  const std::set<Point> set(points.begin(), points.end());
  for (const Point& pt : {Point{3, 4}, Point{4, 3}, Point{5, 0}, Point{0, 5}}) {
    EXPECT_TRUE(set.count(pt)) << pt.first << "," << pt.second;
    EXPECT_TRUE(TileMembership(ctx, 2, 2, pt.first, pt.second));
  }
  EXPECT_FALSE(TileMembership(ctx, 2, 2, 1, 1));
}

TEST(Tiles, EnumerationEqualsBruteForce) {
  for (const auto& [p, n] : DivisibleCases()) {
    const PrimeContext ctx(p, 3);
    for (unsigned j = 1; j <= 3; ++j) {
      const auto points = TilePoints(ctx, n, j);
      const std::set<Point> got(points.begin(), points.end());
      EXPECT_EQ(got.size(), points.size()) << "duplicates for p=" << p << " n=" << n;
      EXPECT_EQ(got, oracle::Tile(n, ctx.modulus(j))) << "p=" << p << " n=" << n << " j=" << j;
    }
  }
}

TEST(Tiles, EnumerationBeyondDivisibleCases) {
  // Odd n and n without 2n | p - 1 use the same decomposition while p does
  // not divide n.
  for (u64 p : {3ull, 5ull, 7ull, 11ull}) {
    const PrimeContext ctx(p, 3);
    for (unsigned n = 2; n <= 5; ++n) {
      for (unsigned j = 1; j <= 3 && ctx.modulus(j) <= 400; ++j) {
        if (j > 1 && n % p == 0) {
          EXPECT_THROW(TilePoints(ctx, n, j), Error);
          continue;
        }
        const auto points = TilePoints(ctx, n, j);
        const std::set<Point> got(points.begin(), points.end());
        EXPECT_EQ(got, oracle::Tile(n, ctx.modulus(j))) << "p=" << p << " n=" << n << " j=" << j;
      }
    }
  }
}

TEST(Tiles, OrderingIsDeterministic) {
  const PrimeContext ctx(13, 2);
  const auto a = TilePoints(ctx, 3, 2);
  const auto b = TilePoints(ctx, 3, 2);
  EXPECT_EQ(a, b);
  // Invertible points first.
  EXPECT_NE(a.front().first % 13, 0u);
  EXPECT_EQ(a.back().first % 13, 0u);
}

TEST(Tiles, ComponentsAreLiftedRoots) {
  for (const auto& [p, n] : DivisibleCases()) {
    const PrimeContext ctx(p, 3);
    for (unsigned j = 1; j <= 3; ++j) {
      const u64 m = ctx.modulus(j);
      for (const auto& comp : TileComponents(ctx, n, j)) {
        EXPECT_EQ(oracle::Pow(comp.slope, n, m), m - 1);
        EXPECT_EQ(comp.slope % p, comp.root);
      }
    }
  }
}

TEST(Box, MatchesBruteForce) {
  for (const auto& [p, n] : DivisibleCases()) {
    const PrimeContext ctx(p, 3);
    for (unsigned j = 1; j <= 3; ++j) {
      const u64 m = ctx.modulus(j);
      const u64 top = j == 1 ? p - 1 : p;
      std::set<Point> want;
      for (u64 x = 0; x <= top; ++x) {
        for (u64 y = 0; y <= top; ++y) {
          if (oracle::OnTile(n, x, y, m)) want.insert({x, y});
        }
      }
      const BoxIntersection box = BoxPoints(ctx, n, j);
      std::set<Point> got(box.nontrivial.begin(), box.nontrivial.end());
      got.insert(box.trivial.begin(), box.trivial.end());
      EXPECT_EQ(got.size(), box.nontrivial.size() + box.trivial.size());
      EXPECT_EQ(got, want) << "p=" << p << " n=" << n << " j=" << j;
      for (const auto& [x, y] : box.trivial) EXPECT_EQ(x % p + y % p, 0u);
    }
  }
}

u64 BruteTheta(u64 p, unsigned n, unsigned j, u64 root) {
  const u64 m = oracle::IntPow(p, j);
  u64 lift = 0;
  for (u64 y = root; y < m; y += p) {
    if (oracle::Pow(y, n, m) == m - 1) lift = y;
  }
  u64 count = 0;
  for (u64 a = 1; a <= p; ++a) {
    const u64 f = oracle::Mul(a, lift, m);
    if (f > 0 && f < p) ++count;
  }
  return count;
}

TEST(Theta, MatchesBruteForceCount) {
  const auto primes = ThetaPrimes(4, 17, 401);
  ASSERT_EQ(primes.size(), 16u);
  for (unsigned j = 1; j <= 3; ++j) {
    const ThetaTable table = ThetaStatistics(4, j, primes);
    for (const auto& row : table.rows) {
      ASSERT_TRUE(row.error.empty());
      const auto roots = oracle::RootsOfMinusOne(row.p, oracle::SmallestPrimitiveRoot(row.p), 4);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        EXPECT_EQ(row.theta[i], BruteTheta(row.p, 4, j, roots[i])) << row.p << " j=" << j;
      }
    }
  }
}

TEST(Theta, PublishedTableAndMirrorSymmetry) {
  const std::vector<u64> primes = {17, 41, 73, 89, 97, 113, 137, 193,
                                   233, 241, 257, 281, 313, 337, 353, 401};
  const std::vector<std::vector<u64>> first = {
      {1, 3, 2, 0, 3, 0, 1, 2, 1, 0, 1, 1, 1, 1, 1, 0},
      {1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 3}};
  const ThetaTable table = ThetaStatistics(4, 2, primes);
  for (std::size_t k = 0; k < primes.size(); ++k) {
    const auto& row = table.rows[k];
    EXPECT_EQ(row.theta, (std::vector<u64>{first[0][k], first[1][k], first[1][k], first[0][k]}))
        << row.p;
    EXPECT_TRUE(row.mirror_symmetric);
  }
  for (const auto& row : ThetaStatistics(4, 3, primes).rows) EXPECT_EQ(row.sum, 0u) << row.p;
}

TEST(Theta, RejectedPrimesBecomeErrorRows) {
  const ThetaTable table = ThetaStatistics(4, 2, {17, 19, 21});
  EXPECT_TRUE(table.rows[0].error.empty());
  EXPECT_FALSE(table.rows[1].error.empty());
  EXPECT_FALSE(table.rows[2].error.empty());
  EXPECT_EQ(ThetaCsv(table), "p,theta_0,theta_1,theta_2,theta_3,sum\n17,1,1,1,1,4\n");
}

TEST(Theta, RangeFilter) {
  EXPECT_EQ(ThetaPrimes(2, 1, 30), (std::vector<u64>{5, 13, 17, 29}));
  EXPECT_EQ(ThetaPrimes(4, 17, 100), (std::vector<u64>{17, 41, 73, 89, 97}));
}

TileComponent Component17() {
  const PrimeContext ctx(17, 3);
  const RootSet rs = RootsOfMinusOne(ctx, 4);
  return MakeComponent(ctx, 9, rs.exponents[0], 3);
}

TEST(BoundingLine, CheckAgreesWithDirectComparison) {
  const TileComponent comp = Component17();
  ASSERT_EQ(comp.root, 9u);
  for (std::int64_t m : {-23, -5, 0, 3}) {
    for (u64 q : {1ull, 7ull, 17ull, 47ull}) {
      const BoundingLine line{m, q, 3};
      u64 violations = 0, checked = 0;
      for (u64 a = 1; a <= 289; ++a) {
        ++checked;
        const auto lhs = static_cast<std::int64_t>(q * comp(a));
        if (lhs < m * static_cast<std::int64_t>(a) + 4913) ++violations;
      }
      const LineCheck check = CheckBoundingLine(comp, line, 0, 289);
      EXPECT_EQ(check.checked, checked);
      EXPECT_EQ(check.violations, violations) << m << "/" << q;
    }
  }
}

TEST(BoundingLine, PublishedLineSide) {
  const TileComponent comp = Component17();
  const BoundingLine line{-23, 47, 3};
  EXPECT_EQ(CalibrateLineSide(comp, line, 0, 289), LineSide::kAbove);
  const LineCheck check = CheckBoundingLine(comp, line, 0, 289);
  // One exact point lies under the published line.
  EXPECT_EQ(check.violations, 1u);
  ASSERT_TRUE(check.first_violation.has_value());
  EXPECT_EQ(*check.first_violation, (Point{197, 5}));
  EXPECT_EQ(comp(197), 5u);
}

TEST(BoundingLine, DegenerateLineIsValid) {
  // a2 = (0 * a1 + p^j) / p^j = 1 is below every nonzero point.
  const PrimeContext ctx(17, 3);
  const TileComponent comp = Component17();
  EXPECT_TRUE(CheckBoundingLine(comp, BoundingLine{0, 4913, 3}, 0, 289).valid());
  const auto found = BoundingLineSearch(ctx, 4, 1, 9, 0, 16);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(CheckBoundingLine(MakeComponent(ctx, 9, comp.exponent, 1), *found, 0, 16).valid());
}

TEST(BoundingLine, SearchResultIsValidAndMinimal) {
  const PrimeContext ctx(17, 3);
  for (unsigned j = 1; j <= 3; ++j) {
    for (u64 root : RootsOfMinusOne(ctx, 4).roots) {
      const u64 a_hi = ctx.modulus(j - 1);
      const auto found = BoundingLineSearch(ctx, 4, j, root, 0, a_hi);
      const RootSet rs = RootsOfMinusOne(ctx, 4);
      const auto idx = std::find(rs.roots.begin(), rs.roots.end(), root) - rs.roots.begin();
      const TileComponent comp = MakeComponent(ctx, root, rs.exponents[idx], j);
      const u64 pj = ctx.modulus(j);
      // Brute force over the same limits: q <= p, m^2 < p^j.
      std::optional<BoundingLine> brute;
      for (u64 q = 1; q <= 17 && !brute; ++q) {
        for (std::int64_t am = 0; am * am < static_cast<std::int64_t>(pj) && !brute; ++am) {
          for (std::int64_t m : {-am, am}) {
            if (CheckBoundingLine(comp, BoundingLine{m, q, j}, 0, a_hi).valid()) {
              brute = BoundingLine{m, q, j};
              break;
            }
          }
        }
      }
      EXPECT_EQ(found.has_value(), brute.has_value()) << "j=" << j << " root=" << root;
      if (found && brute) {
        EXPECT_EQ(found->q, brute->q);
        EXPECT_EQ(std::llabs(found->m), std::llabs(brute->m));
        EXPECT_TRUE(CheckBoundingLine(comp, *found, 0, a_hi).valid());
      }
    }
  }
}

TEST(BoundingLine, SearchRejectsForeignRoot) {
  const PrimeContext ctx(17, 3);
  EXPECT_THROW(BoundingLineSearch(ctx, 4, 3, 4, 0, 289), Error);
}

TEST(Curve, LatticePoints) {
  EXPECT_EQ(CurveLatticePoints(2, 5), (std::vector<Point>{{0, 5}, {3, 4}, {4, 3}, {5, 0}}));
  EXPECT_EQ(CurveLatticePoints(3, 12), (std::vector<Point>{{0, 12}, {12, 0}}));
  for (u64 z = 1; z <= 60; ++z) {
    std::vector<Point> want;
    for (u64 x = 0; x <= z; ++x) {
      for (u64 y = 0; y <= z; ++y) {
        if (x * x + y * y == z * z) want.push_back({x, y});
      }
    }
    EXPECT_EQ(CurveLatticePoints(2, z), want) << z;
  }
  EXPECT_THROW(CurveLatticePoints(1, 5), Error);
  EXPECT_THROW(CurveLatticePoints(5, 10000), Error);
}

}  // namespace
}  // namespace fermatmod
