#include "fermatmod/tiles.hpp"

#include <algorithm>
#include <sstream>

#include "fermatmod/error.hpp"
#include "fermatmod/parallel.hpp"
#include "fermatmod/simd/affine.hpp"

namespace fermatmod {

namespace {

using i128 = __int128;

i128 FloorDiv(i128 num, i128 den) {
  // den > 0
  i128 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

i128 CeilDiv(i128 num, i128 den) { return -FloorDiv(-num, den); }

// Pairs (p*u, p*v) of T_n(p; j), lexicographic.
std::vector<Point> NonInvertiblePoints(const PrimeContext& ctx, unsigned n, unsigned j) {
  const u64 p = ctx.p();
  const u64 range = ctx.modulus(j - 1);  // u, v in Z_{p^(j-1)}
  std::vector<Point> out;
  if (j <= n) {
    out.reserve(range * range);
    for (u64 u = 0; u < range; ++u) {
      for (u64 v = 0; v < range; ++v) out.emplace_back(p * u, p * v);
    }
    return out;
  }
  // p^n (u^n + v^n) == 0 mod p^j  <=>  (u, v) mod p^(j-n) lies in T_n(p; j-n).
  const u64 inner_mod = ctx.modulus(j - n);
  const u64 lifts = range / inner_mod;
  const auto inner = TilePoints(ctx, n, j - n);
  out.reserve(inner.size() * lifts * lifts);
  for (const auto& [u0, v0] : inner) {
    for (u64 ku = 0; ku < lifts; ++ku) {
      for (u64 kv = 0; kv < lifts; ++kv) {
        out.emplace_back(p * (u0 + ku * inner_mod), p * (v0 + kv * inner_mod));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RootSet RootsOfMinusOne(const PrimeContext& ctx, unsigned n) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "exponent n must be >= 2");
  const u64 p = ctx.p();
  const u64 order = p - 1;
  RootSet rs;
  rs.p = p;
  rs.n = n;
  rs.two_n_divides = order % (2 * static_cast<u64>(n)) == 0;

  // g^(n*a) == g^((p-1)/2)  <=>  n*a == (p-1)/2  (mod p-1).
  const u64 d = Gcd(n, order);
  const u64 half = order / 2;
  if (half % d != 0) return rs;
  const u64 reduced_mod = order / d;
  const u64 n_red = (n / d) % reduced_mod;
  const u64 inv = reduced_mod == 1 ? 0 : *InvMod(n_red, reduced_mod);
  rs.a0 = MulMod((half / d) % reduced_mod, inv, reduced_mod);
  rs.stride = reduced_mod;
  for (u64 i = 0; i < d; ++i) {
    const u64 e = rs.a0 + i * rs.stride;
    rs.exponents.push_back(e);
    rs.roots.push_back(ctx.Exp(1, e).value);
  }
  return rs;
}

TileComponent MakeComponent(const PrimeContext& ctx, u64 root, u64 exponent, unsigned j) {
  TileComponent c;
  c.root = root;
  c.exponent = exponent;
  c.level = j;
  c.modulus = ctx.modulus(j);
  c.slope = PowMod(root, ctx.modulus(j - 1), c.modulus);
  return c;
}

std::vector<TileComponent> TileComponents(const PrimeContext& ctx, unsigned n, unsigned j) {
  if (j > 1 && n % ctx.p() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "roots do not lift uniquely when p divides n");
  }
  const RootSet rs = RootsOfMinusOne(ctx, n);
  std::vector<TileComponent> out;
  out.reserve(rs.roots.size());
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    out.push_back(MakeComponent(ctx, rs.roots[i], rs.exponents[i], j));
  }
  return out;
}

bool TileMembership(const PrimeContext& ctx, unsigned n, unsigned j, u64 x, u64 y) {
  const u64 m = ctx.modulus(j);
  return AddMod(PowMod(x, n, m), PowMod(y, n, m), m) == 0;
}

std::vector<Point> TilePoints(const PrimeContext& ctx, unsigned n, unsigned j) {
  const u64 p = ctx.p();
  const u64 m = ctx.modulus(j);
  std::vector<Point> out;
  std::vector<u64> column(m);
  for (const auto& comp : TileComponents(ctx, n, j)) {
    simd::AffineFill({0, comp.slope, m}, column);
    for (u64 a = 0; a < m; ++a) {
      if (a % p != 0) out.emplace_back(a, column[a]);
    }
  }
  auto block = NonInvertiblePoints(ctx, n, j);
  out.insert(out.end(), block.begin(), block.end());
  return out;
}

BoxIntersection BoxPoints(const PrimeContext& ctx, unsigned n, unsigned j) {
  const u64 p = ctx.p();
  const u64 m = ctx.modulus(j);
  BoxIntersection box;
  std::vector<u64> hits;
  for (const auto& comp : TileComponents(ctx, n, j)) {
    // a = k + 1 for k < p - 1; invertible values are never 0 or p.
    hits.clear();
    simd::AffineSelectInRange({comp.slope, comp.slope, m}, p - 1, 1, p, hits);
    for (u64 k : hits) box.nontrivial.emplace_back(k + 1, comp(k + 1));
  }
  const std::vector<Point> corners =
      j == 1 ? std::vector<Point>{{0, 0}}
             : std::vector<Point>{{0, 0}, {0, p}, {p, 0}, {p, p}};
  for (const auto& [x, y] : corners) {
    if (TileMembership(ctx, n, j, x, y)) box.trivial.emplace_back(x, y);
  }
  return box;
}

std::vector<u64> ThetaPrimes(unsigned n, u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 p = std::max<u64>(lo, 3); p <= hi; ++p) {
    if ((p - 1) % (2 * static_cast<u64>(n)) == 0 && IsPrime(p)) out.push_back(p);
  }
  return out;
}

ThetaTable ThetaStatistics(unsigned n, unsigned j, const std::vector<u64>& primes) {
  ThetaTable table;
  table.n = n;
  table.j = j;
  table.rows.resize(primes.size());
  ParallelFor(primes.size(), [&](std::size_t idx) {
    ThetaRow& row = table.rows[idx];
    row.p = primes[idx];
    try {
      if (row.p < 3 || (row.p - 1) % (2 * static_cast<u64>(n)) != 0) {
        throw Error(ErrorKind::kDivisibility,
                    "2n does not divide p-1 for p=" + std::to_string(row.p));
      }
      const PrimeContext ctx(row.p, j);
      row.g = ctx.g();
      const u64 m = ctx.modulus(j);
      for (const auto& comp : TileComponents(ctx, n, j)) {
        row.theta.push_back(
            simd::AffineCountInRange({comp.slope, comp.slope, m}, row.p, 1, row.p));
      }
      for (u64 t : row.theta) row.sum += t;
      row.mirror_symmetric = std::equal(row.theta.begin(), row.theta.end(), row.theta.rbegin());
    } catch (const Error& e) {
      row.theta.clear();
      row.error = e.what();
    }
  });
  return table;
}

std::string ThetaCsv(const ThetaTable& table) {
  std::ostringstream os;
  os << 'p';
  for (unsigned i = 0; i < table.n; ++i) os << ",theta_" << i;
  os << ",sum\n";
  for (const auto& row : table.rows) {
    if (!row.error.empty()) continue;
    os << row.p;
    for (u64 t : row.theta) os << ',' << t;
    os << ',' << row.sum << '\n';
  }
  return os.str();
}

LineCheck CheckBoundingLine(const TileComponent& component, const BoundingLine& line,
                            u64 a_lo, u64 a_hi, LineSide side) {
  LineCheck check;
  const i128 intercept = static_cast<i128>(component.modulus);
  for (u64 a = a_lo; a <= a_hi; ++a) {
    const u64 f = component(a);
    if (f == 0 && a % component.modulus == 0) continue;
    ++check.checked;
    const i128 lhs = static_cast<i128>(line.q) * f;
    const i128 rhs = static_cast<i128>(line.m) * static_cast<i128>(a) + intercept;
    const bool ok = side == LineSide::kAbove ? lhs >= rhs : lhs <= rhs;
    if (!ok) {
      if (!check.first_violation) check.first_violation = Point{a, f};
      ++check.violations;
    }
  }
  return check;
}

LineSide CalibrateLineSide(const TileComponent& component, const BoundingLine& line,
                           u64 a_lo, u64 a_hi) {
  const auto above = CheckBoundingLine(component, line, a_lo, a_hi, LineSide::kAbove);
  const auto below = CheckBoundingLine(component, line, a_lo, a_hi, LineSide::kBelow);
  return above.violations <= below.violations ? LineSide::kAbove : LineSide::kBelow;
}

std::optional<BoundingLine> BoundingLineSearch(const PrimeContext& ctx, unsigned n, unsigned j,
                                               u64 root, u64 a_lo, u64 a_hi,
                                               LineSearchLimits limits) {
  const RootSet rs = RootsOfMinusOne(ctx, n);
  const auto it = std::find(rs.roots.begin(), rs.roots.end(), root % ctx.p());
  if (it == rs.roots.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::to_string(root) + " is not in S_" + std::to_string(n) + "(p)");
  }
  const auto comp =
      MakeComponent(ctx, *it, rs.exponents[static_cast<std::size_t>(it - rs.roots.begin())], j);
  const u64 pj = ctx.modulus(j);
  const u64 q_max = limits.q_max == 0 ? ctx.p() : limits.q_max;
  auto m_allowed = [&](i128 m) {
    const i128 a = m < 0 ? -m : m;
    return limits.m_abs_bound == 0 ? a * a < static_cast<i128>(pj) : a < limits.m_abs_bound;
  };

  std::vector<Point> pts;
  for (u64 a = a_lo; a <= a_hi; ++a) {
    const u64 f = comp(a);
    if (!(f == 0 && a % pj == 0)) pts.emplace_back(a, f);
  }
  if (pts.empty()) return BoundingLine{0, 1, j};

  for (u64 q = 1; q <= q_max; ++q) {
    // Above: q f - p^j >= m a for every a > 0, so m <= min floor((q f - p^j)/a).
    // Below: m >= max ceil((q f - p^j)/a).
    std::optional<i128> limit;
    bool feasible = true;
    for (const auto& [a, f] : pts) {
      const i128 num = static_cast<i128>(q) * f - static_cast<i128>(pj);
      if (a == 0) {
        // Points with a = 0 constrain only the intercept.
        const bool ok = kBoundingLineSide == LineSide::kAbove ? num >= 0 : num <= 0;
        if (!ok) feasible = false;
        continue;
      }
      const i128 bound = kBoundingLineSide == LineSide::kAbove ? FloorDiv(num, a) : CeilDiv(num, a);
      if (!limit) {
        limit = bound;
      } else if (kBoundingLineSide == LineSide::kAbove) {
        limit = std::min(*limit, bound);
      } else {
        limit = std::max(*limit, bound);
      }
    }
    if (!feasible) continue;
    i128 m = 0;
    if (limit) {
      if (kBoundingLineSide == LineSide::kAbove && *limit < 0) m = *limit;
      if (kBoundingLineSide == LineSide::kBelow && *limit > 0) m = *limit;
    }
    if (m_allowed(m)) return BoundingLine{static_cast<std::int64_t>(m), q, j};
  }
  return std::nullopt;
}

std::vector<Point> CurveLatticePoints(unsigned n, u64 z) {
  if (n < 2 || z < 1) throw Error(ErrorKind::kInvalidArgument, "need n >= 2 and z >= 1");
  const auto zn = CheckedPow(z, n);
  if (!zn) throw Error(ErrorKind::kWidthOverflow, "z^n exceeds 2^63");
  std::vector<u64> powers(z + 1);
  for (u64 x = 0; x <= z; ++x) powers[x] = *CheckedPow(x, n);
  std::vector<Point> out;
  for (u64 x = 0; x <= z; ++x) {
    const u64 target = *zn - powers[x];
    const auto it = std::lower_bound(powers.begin(), powers.end(), target);
    if (it != powers.end() && *it == target) {
      out.emplace_back(x, static_cast<u64>(it - powers.begin()));
    }
  }
  return out;
}

}  // namespace fermatmod
