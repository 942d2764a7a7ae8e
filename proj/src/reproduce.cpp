#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "fermatmod/cli.hpp"
#include "fermatmod/digits.hpp"
#include "fermatmod/emit.hpp"
#include "fermatmod/error.hpp"
#include "fermatmod/reference_tables.hpp"
#include "fermatmod/tiles.hpp"
#include "fermatmod/zipper.hpp"

namespace fermatmod::cli {

namespace {

namespace ref = reference;
using Status = ManifestEntry::Status;

template <typename Table>
emit::Grid ToGrid(const Table& table) {
  emit::Grid grid(table.size(), table.front().size());
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) grid.at(r, c) = table[r][c];
  }
  return grid;
}

// First mismatching cell, or empty when the grids agree.
std::string GridDiff(const emit::Grid& got, const emit::Grid& want) {
  if (got.rows != want.rows || got.cols != want.cols) return "shape differs";
  for (std::size_t r = 0; r < got.rows; ++r) {
    for (std::size_t c = 0; c < got.cols; ++c) {
      if (got.at(r, c) != want.at(r, c)) {
        return "cell (" + std::to_string(r) + "," + std::to_string(c) + ") is " +
               std::to_string(got.at(r, c)) + ", expected " + std::to_string(want.at(r, c));
      }
    }
  }
  return "";
}

std::string Join(const std::vector<u64>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

class Reproducer {
 public:
  Reproducer(std::filesystem::path dir, const LogTableCache& cache)
      : dir_(std::move(dir)), cache_(cache) {}

  ReproduceReport Run() {
    std::filesystem::create_directories(dir_);
    Guard("roots_p17_n4", [&] { Roots(); });
    Guard("exp_p5_level1", [&] { Exp1(); });
    Guard("h_tables_p5", [&] { HTables(); });
    Guard("a_tables_p5", [&] { ATables(); });
    Guard("s0_p5_a0_j2", [&] { S0(); });
    Guard("zipper_sets_p5", [&] { ZipperSets(); });
    Guard("tile_p5_n2_j2", [&] { Tile(); });
    Guard("theta_n4", [&] { Theta(); });
    Guard("zipper_p97_n4_a12", [&] { P97(); });
    Guard("bounding_line_p17_x9_j3", [&] { Line(); });
    Guard("cache_recovery", [&] { CacheRecovery(); });
    report_.dir = dir_;
    emit::WriteFileAtomic(dir_ / "manifest.txt", report_.Manifest());
    return report_;
  }

 private:
  void Add(Status status, std::string name, std::string detail = "") {
    report_.entries.push_back({status, std::move(name), std::move(detail)});
  }

  void Check(bool ok, std::string name, std::string detail) {
    Add(ok ? Status::kPass : Status::kFail, std::move(name), std::move(detail));
  }

  void Guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      Add(Status::kFail, name, e.what());
    }
  }

  void Write(const std::string& file, std::string_view data) {
    emit::WriteFileAtomic(dir_ / file, data);
  }

  void Roots() {
    const PrimeContext ctx = cache_.Load(17, 1);
    const RootSet roots = RootsOfMinusOne(ctx, 4);
    std::ostringstream os;
    os << "exponent,root\n";
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
      os << roots.exponents[i] << ',' << roots.roots[i] << '\n';
    }
    Write("roots_p17_n4.csv", os.str());
    const std::vector<u64> want(ref::kRootsP17N4.begin(), ref::kRootsP17N4.end());
    Check(roots.roots == want, "roots_p17_n4", Join(roots.roots));
  }

  void Exp1() {
    const PrimeContext ctx = cache_.Load(5, 1);
    std::vector<Point> rows;
    bool ok = true;
    for (u64 s = 0; s < 4; ++s) {
      rows.emplace_back(s, ctx.Exp(1, s).value);
      ok = ok && rows.back().second == ref::kExp1P5[s];
    }
    Write("exp_p5_level1.csv", emit::PairsCsv(rows, "s,exp"));
    Check(ok, "exp_p5_level1", "g=" + std::to_string(ctx.g()));
  }

  void HTables() {
    const PrimeContext ctx = cache_.Load(5, 3);
    for (u64 a : {u64{0}, u64{3}}) {
      emit::Grid grid(4, 5);
      for (u64 s = 0; s < 4; ++s) {
        for (u64 r = 0; r < 5; ++r) grid.at(s, r) = HEval(ctx, a, 1, s, DigitVector(5, {r})).value;
      }
      const std::string name = "h1_p5_a" + std::to_string(a);
      Write(name + ".csv", emit::GridCsv(grid, "s"));
      const std::string diff = GridDiff(grid, ToGrid(a == 0 ? ref::kH1A0P5 : ref::kH1A3P5));
      Check(diff.empty(), name, diff);
    }
    for (u64 s : {u64{3}, u64{2}}) {
      emit::Grid grid(5, 5);
      for (u64 r0 = 0; r0 < 5; ++r0) {
        for (u64 r1 = 0; r1 < 5; ++r1) {
          grid.at(r0, r1) = HEval(ctx, 0, 2, s, DigitVector(5, {r0, r1})).value;
        }
      }
      const std::string name = "h2_p5_a0_s" + std::to_string(s);
      Write(name + ".csv", emit::GridCsv(grid, "r0"));
      const std::string diff = GridDiff(grid, ToGrid(s == 3 ? ref::kH2A0S3P5 : ref::kH2A0S2P5));
      Check(diff.empty(), name, diff);
    }
  }

  void ATables() {
    const PrimeContext ctx = cache_.Load(5, 2);
    const DigitVector empty(5, {});
    for (u64 a : {u64{0}, u64{3}}) {
      std::vector<Point> rows;
      std::vector<u64> values;
      for (u64 s = 0; s < 4; ++s) {
        values.push_back(ZipperDigit(ctx, a, 1, s, empty));
        rows.emplace_back(s, values.back());
      }
      const std::string name = "a1_p5_a" + std::to_string(a);
      Write(name + ".csv", emit::PairsCsv(rows, "s,A"));
      const auto& want = a == 0 ? ref::kA1A0P5 : ref::kA1A3P5;
      Check(std::equal(values.begin(), values.end(), want.begin(), want.end()), name, Join(values));
    }
    // A_1^3(s) recovered from A_1^0 by the shift identity at s = 0 and 1.
    const std::vector<ShiftSample> samples = {{0, empty}, {1, empty}};
    const AShiftReport shift = AShiftIdentityCheck(ctx, 3, 1, samples);
    std::ostringstream os;
    os << "s,lhs,rhs\n";
    for (const auto& row : shift.rows) os << row.s << ',' << row.lhs << ',' << row.rhs << '\n';
    Write("a1_p5_shift_identity.csv", os.str());
    const bool ok = shift.agreements == 2 && shift.rows[0].lhs == 3 && shift.rows[1].lhs == 1;
    Check(ok, "a1_p5_shift_identity",
          "A(0)=" + std::to_string(shift.rows[0].rhs) + " A(1)=" + std::to_string(shift.rows[1].rhs));
  }

  void S0() {
    const PrimeContext ctx = cache_.Load(5, 3);
    const S0Search search = ExtractS0(ctx, 0, 2);
    std::ostringstream os;
    os << "s,slope\n";
    for (std::size_t s = 0; s < search.slopes.size(); ++s) os << s << ',' << search.slopes[s] << '\n';
    Write("s0_p5_a0_j2.csv", os.str());
    Check(search.s0 == ref::kS0P5A0J2, "s0_p5_a0_j2",
          search.s0 ? "s0=" + std::to_string(*search.s0) : "s0=none");
  }

  void ZipperSets() {
    const PrimeContext ctx = cache_.Load(5, 3);
    std::ostringstream os;
    os << "level,s,digits\n";
    std::vector<std::vector<ZElement>> common(2);
    for (unsigned j = 1; j <= 2; ++j) {
      const auto base = ZSet(ctx, 0, j);
      const auto shifted = ZSet(ctx, 3, j);
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] == shifted[i]) {
          common[j - 1].push_back(base[i]);
          os << j << ',' << base[i].s << ',';
          for (u64 d : base[i].digits.digits()) os << d;
          os << '\n';
        }
      }
    }
    Write("zipper_sets_p5_a3.csv", os.str());
    const bool level1 = common[0].size() == 1 && common[0][0].s == 3 &&
                        common[0][0].digits.digits() == std::vector<u64>{1};
    Check(level1, "zipper_sets_p5_level1", std::to_string(common[0].size()) + " common elements");
    Check(common[1].empty(), "zipper_sets_p5_level2",
          std::to_string(common[1].size()) + " common elements");
    // The level-1 solution encodes 3^2 + 4^2 == 0 (mod 25).
    const ZipperResult result = ZipperSolve(ctx, 2, 3);
    const auto& sols = result.shifts.front().solutions;
    bool pythagorean = sols.size() == 1;
    if (pythagorean) pythagorean = MockPoint(ctx, sols.front()) == Point{3, 4};
    Check(pythagorean, "zipper_p5_n2_point", "expects (3,4) mod 25");
  }

  void Tile() {
    const PrimeContext ctx = cache_.Load(5, 2);
    const auto points = TilePoints(ctx, 2, 2);
    Write("tile_p5_n2_j2.csv", emit::PairsCsv(points));
    const std::set<Point> have(points.begin(), points.end());
    bool ok = true;
    for (const Point& pt : {Point{3, 4}, Point{4, 3}, Point{5, 0}, Point{0, 5}}) {
      ok = ok && have.count(pt) == 1;
    }
    Check(ok, "tile_p5_n2_j2", std::to_string(points.size()) + " points");
  }

  void Theta() {
    const std::vector<u64> primes(ref::kThetaPrimes.begin(), ref::kThetaPrimes.end());
    const ThetaTable level2 = ThetaStatistics(4, 2, primes);
    Write("theta_n4_j2.csv", ThetaCsv(level2));
    std::string mismatch;
    for (std::size_t k = 0; k < level2.rows.size() && mismatch.empty(); ++k) {
      const ThetaRow& row = level2.rows[k];
      if (!row.error.empty()) {
        mismatch = row.error;
        break;
      }
      for (std::size_t i = 0; i < 4; ++i) {
        if (row.theta[i] != ref::kThetaN4J2[i][k]) {
          mismatch = "p=" + std::to_string(row.p) + " theta_" + std::to_string(i) + "=" +
                     std::to_string(row.theta[i]);
          break;
        }
      }
    }
    Check(mismatch.empty(), "theta_n4_j2", mismatch);

    const ThetaTable level3 = ThetaStatistics(4, 3, primes);
    Write("theta_n4_j3.csv", ThetaCsv(level3));
    bool zero = true;
    for (const auto& row : level3.rows) zero = zero && row.error.empty() && row.sum == 0;
    Check(zero, "theta_n4_j3_sums", "sum over components at j=3");

    u64 skipped = 0;
    for (u64 p = ref::kThetaPrimes.front(); p <= ref::kThetaPrimes.back(); ++p) {
      if (IsPrime(p) && (p - 1) % 8 != 0) ++skipped;
    }
    Add(Status::kNote, "theta_n4_range",
        std::to_string(skipped) + " primes in 17..401 without 8 | p-1 skipped");
  }

  void P97() {
    const PrimeContext ctx = cache_.Load(97, 4, 5);
    const ZipperResult result = ZipperSolve(ctx, 4, 12);
    Write("zipper_p97_n4_a12.json", ZipperJson(result));
    const auto& sols = result.shifts.front().solutions;
    std::set<u64> partners;
    std::set<u64> discrepancies;
    u64 deeper = 0;
    for (const auto& sol : sols) {
      partners.insert(sol.partner_exponent(ctx.p()));
      if (sol.discrepancy) discrepancies.insert(*sol.discrepancy);
      if (sol.level >= 2) ++deeper;
    }
    std::set<u64> labels;
    for (u64 x : ref::kP97Labels) labels.insert(ctx.Log(1, x).value);
    Check(sols.size() == 3 && partners == labels, "zipper_p97_level1",
          std::to_string(sols.size()) + " solutions labelled by Log_1(11), Log_1(22), Log_1(33)");
    Check(deeper == 0 && discrepancies == std::set<u64>{ref::kP97LevelTwoDiscrepancy},
          "zipper_p97_level2", "discrepancy " + std::to_string(ref::kP97LevelTwoDiscrepancy));

    const auto profiles = HProfiles(ctx, 12);
    const char* stems[] = {"h1_base", "h1_shift", "h2_base", "h2_shift"};
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const std::string stem = std::string("profile_p97_a12_") + stems[i];
      Write(stem + ".csv", ProfileCsv(profiles[i]));
      Write(stem + "_diff.csv", DerivativeCsv(profiles[i]));
    }
    const auto zeros = CommonZeros(profiles);
    Check(zeros.empty(), "profiles_p97_common_zeros", zeros.empty() ? "none" : Join(zeros));
  }

  void Line() {
    const PrimeContext ctx = cache_.Load(17, 3);
    const RootSet roots = RootsOfMinusOne(ctx, 4);
    const auto it = std::find(roots.roots.begin(), roots.roots.end(), u64{9});
    const TileComponent comp =
        MakeComponent(ctx, 9, roots.exponents[it - roots.roots.begin()], 3);
    const BoundingLine line{ref::kLineM, ref::kLineQ, 3};
    const LineCheck check = CheckBoundingLine(comp, line, 0, 289);
    std::ostringstream os;
    os << "a,f\n";
    for (u64 a = 0; a <= 289; ++a) os << a << ',' << comp(a) << '\n';
    Write("component_p17_x9_j3.csv", os.str());
    std::string detail = std::to_string(check.violations) + " of " +
                         std::to_string(check.checked) + " points below the line";
    if (check.first_violation) {
      detail += ", first at (" + std::to_string(check.first_violation->first) + "," +
                std::to_string(check.first_violation->second) + ")";
    }
    const auto found = BoundingLineSearch(ctx, 4, 3, 9, 0, 289);
    detail += found ? "; smallest valid line m=" + std::to_string(found->m) + " q=" +
                          std::to_string(found->q)
                    : "; no valid line with q <= p";
    Add(Status::kInfo, "bounding_line_p17_x9_j3", detail);
  }

  void CacheRecovery() {
    const std::filesystem::path scratch = dir_ / "cache-check";
    std::filesystem::create_directories(scratch);
    const LogTableCache cache(scratch);
    const PrimeContext fresh(97, 2, 5);
    cache.Store(fresh);
    {
      std::ofstream corrupt(cache.PathFor(97, 5), std::ios::trunc);
      corrupt << "p,g,j\n97,5,1\nx,s\n1,0\n2,1\n";
    }
    bool hit = true;
    const PrimeContext loaded = cache.Load(97, 2, 5, &hit);
    const bool ok = !hit && loaded.log1_table() == fresh.log1_table();
    std::filesystem::remove_all(scratch);
    Check(ok, "cache_recovery", "corrupted table rejected and rebuilt");
  }

  std::filesystem::path dir_;
  const LogTableCache& cache_;
  ReproduceReport report_;
};

const char* StatusName(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kInfo: return "INFO";
    case Status::kNote: return "NOTE";
  }
  return "?";
}

}  // namespace

bool ReproduceReport::passed() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const ManifestEntry& e) { return e.status == Status::kFail; });
}

std::string ReproduceReport::Manifest() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << StatusName(e.status) << ' ' << e.name;
    if (!e.detail.empty()) os << ": " << e.detail;
    os << '\n';
  }
  os << "RESULT " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

ReproduceReport ReproduceAll(const std::filesystem::path& dir, const LogTableCache& cache) {
  return Reproducer(dir, cache).Run();
}

std::filesystem::path TimestampedDir(const std::filesystem::path& base) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "repro-%Y%m%d-%H%M%S", &tm);
  std::filesystem::path dir = base / stamp;
  for (int k = 1; std::filesystem::exists(dir); ++k) {
    dir = base / (std::string(stamp) + "-" + std::to_string(k));
  }
  return dir;
}

}  // namespace fermatmod::cli
