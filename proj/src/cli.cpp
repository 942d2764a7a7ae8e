#include "fermatmod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fermatmod/digits.hpp"
#include "fermatmod/emit.hpp"
#include "fermatmod/error.hpp"
#include "fermatmod/tiles.hpp"
#include "fermatmod/zipper.hpp"
#include "json.hpp"

namespace fermatmod::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* FormatName(Format f) {
  switch (f) {
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
    case Format::kPgm: return "pgm";
  }
  return "?";
}

u64 ParseU64(std::string_view text, const char* what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

std::pair<u64, u64> ParseRange(std::string_view text, const char* what) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw UsageError(std::string(what) + " must look like A..B");
  }
  const u64 lo = ParseU64(text.substr(0, dots), what);
  const u64 hi = ParseU64(text.substr(dots + 2), what);
  if (lo > hi) throw UsageError(std::string(what) + ": empty range");
  return {lo, hi};
}

std::string JoinU64(const std::vector<u64>& values, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

// Options shared by the subcommands; each subcommand registers the subset
// it uses.
struct Options {
  RunConfig cfg;
  std::optional<u64> p;
  std::optional<u64> g;
  std::optional<std::string> format;
  std::optional<u64> shift;
  std::optional<u64> s;
  std::optional<u64> root;
  std::optional<u64> q_max;
  std::string primes;
  std::string range;
  std::string line;
  std::string reading = "all";
  u64 z = 0;
  bool exact_dir = false;
};

struct Runner {
  Options& o;
  std::ostream& out;
  std::ostream& err;

  LogTableCache Cache() const { return LogTableCache(o.cfg.cache_dir); }

  PrimeContext Context(unsigned j_max) const {
    if (!o.p) throw UsageError("-p is required");
    if (j_max < 1) j_max = 1;
    return Cache().Load(*o.p, j_max, o.g);
  }

  Format ResolveFormat(Format fallback, std::initializer_list<Format> allowed) const {
    Format f = fallback;
    if (o.format) {
      if (*o.format == "csv") {
        f = Format::kCsv;
      } else if (*o.format == "json") {
        f = Format::kJson;
      } else if (*o.format == "pgm") {
        f = Format::kPgm;
      } else {
        throw UsageError("unknown format '" + *o.format + "'");
      }
    }
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
      throw UsageError(std::string("format ") + FormatName(f) + " is not supported by " +
                       o.cfg.subcommand);
    }
    o.cfg.format = f;
    return f;
  }

  // Writes `data` to --output ("-" for stdout); without --output only the
  // summary is printed.
  void Emit(std::string_view data) const {
    if (o.cfg.output.empty()) return;
    if (o.cfg.output == "-") {
      out << data;
    } else {
      emit::WriteFileAtomic(o.cfg.output, data);
    }
  }

  void Summary(const std::string& line) const {
    if (o.cfg.output == "-") {
      err << line << '\n';
    } else {
      out << line << '\n';
    }
  }

  u64 Shift() const { return o.shift.value_or(0); }

  void Roots() {
    const Format f = ResolveFormat(Format::kCsv, {Format::kCsv, Format::kJson});
    const PrimeContext ctx = Context(1);
    const RootSet roots = RootsOfMinusOne(ctx, o.cfg.n);
    if (f == Format::kCsv) {
      std::ostringstream os;
      os << "exponent,root\n";
      for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        os << roots.exponents[i] << ',' << roots.roots[i] << '\n';
      }
      Emit(os.str());
    } else {
      json doc;
      doc["p"] = roots.p;
      doc["g"] = ctx.g();
      doc["n"] = roots.n;
      doc["exponents"] = roots.exponents;
      doc["roots"] = roots.roots;
      Emit(doc.dump(2) + "\n");
    }
    Summary(roots.empty() ? "none" : JoinU64(roots.roots));
  }

  void Tile() {
    const Format f = ResolveFormat(Format::kCsv, {Format::kCsv, Format::kPgm});
    const PrimeContext ctx = Context(o.cfg.j);
    const auto points = TilePoints(ctx, o.cfg.n, o.cfg.j);
    const u64 m = ctx.modulus(o.cfg.j);
    if (f == Format::kPgm) {
      if (m > 1024) throw UsageError("pgm output needs p^j <= 1024");
      emit::Grid grid(m, m);
      for (const auto& [x, y] : points) grid.at(x, y) = 1;
      Emit(emit::GridPgm(grid, 1));
    } else {
      Emit(emit::PairsCsv(points));
    }
    Summary("tile p=" + std::to_string(ctx.p()) + " n=" + std::to_string(o.cfg.n) +
            " j=" + std::to_string(o.cfg.j) + ": " + std::to_string(points.size()) + " points");
  }

  void Box() {
    const Format f = ResolveFormat(Format::kCsv, {Format::kCsv, Format::kJson});
    const PrimeContext ctx = Context(o.cfg.j);
    const BoxIntersection box = BoxPoints(ctx, o.cfg.n, o.cfg.j);
    if (f == Format::kCsv) {
      std::ostringstream os;
      os << "x,y,kind\n";
      for (const auto& [x, y] : box.nontrivial) os << x << ',' << y << ",nontrivial\n";
      for (const auto& [x, y] : box.trivial) os << x << ',' << y << ",trivial\n";
      Emit(os.str());
    } else {
      json doc;
      doc["p"] = ctx.p();
      doc["n"] = o.cfg.n;
      doc["j"] = o.cfg.j;
      doc["nontrivial"] = box.nontrivial;
      doc["trivial"] = box.trivial;
      Emit(doc.dump(2) + "\n");
    }
    Summary("box: " + std::to_string(box.nontrivial.size()) + " nontrivial, " +
            std::to_string(box.trivial.size()) + " trivial");
  }

  void Theta() {
    const Format f = ResolveFormat(Format::kCsv, {Format::kCsv, Format::kJson});
    std::vector<u64> primes;
    if (o.primes.find("..") != std::string::npos) {
      const auto [lo, hi] = ParseRange(o.primes, "--primes");
      primes = ThetaPrimes(o.cfg.n, lo, hi);
    } else {
      std::stringstream ss(o.primes);
      for (std::string item; std::getline(ss, item, ',');) {
        primes.push_back(ParseU64(item, "--primes"));
      }
    }
    if (primes.empty()) throw UsageError("no primes with 2n | p-1 selected");
    const ThetaTable table = ThetaStatistics(o.cfg.n, o.cfg.j, primes);
    std::size_t used = 0;
    bool all_zero = true;
    for (const auto& row : table.rows) {
      if (!row.error.empty()) {
        err << "note: skipped p=" << row.p << " (" << row.error << ")\n";
        continue;
      }
      ++used;
      all_zero = all_zero && row.sum == 0;
    }
    if (f == Format::kCsv) {
      Emit(ThetaCsv(table));
    } else {
      json doc;
      doc["n"] = table.n;
      doc["j"] = table.j;
      doc["rows"] = json::array();
      for (const auto& row : table.rows) {
        if (!row.error.empty()) continue;
        json r;
        r["p"] = row.p;
        r["g"] = row.g;
        r["theta"] = row.theta;
        r["sum"] = row.sum;
        doc["rows"].push_back(std::move(r));
      }
      Emit(doc.dump(2) + "\n");
    }
    Summary("theta n=" + std::to_string(o.cfg.n) + " j=" + std::to_string(o.cfg.j) + ": " +
            std::to_string(used) + " primes, sums all zero: " + (all_zero ? "yes" : "no"));
  }

  void Bline() {
    const Format f = ResolveFormat(Format::kCsv, {Format::kCsv, Format::kJson});
    const PrimeContext ctx = Context(o.cfg.j);
    if (!o.root) throw UsageError("--root is required");
    u64 a_lo = 0;
    u64 a_hi = ctx.modulus(o.cfg.j - 1);
    if (!o.range.empty()) std::tie(a_lo, a_hi) = ParseRange(o.range, "--range");
    const RootSet roots = RootsOfMinusOne(ctx, o.cfg.n);
    const auto it = std::find(roots.roots.begin(), roots.roots.end(), *o.root % ctx.p());
    if (it == roots.roots.end()) throw UsageError("root is not a solution of x^n == -1 mod p");
    const u64 exponent = roots.exponents[it - roots.roots.begin()];
    const TileComponent comp = MakeComponent(ctx, *it, exponent, o.cfg.j);

    std::optional<BoundingLine> line;
    std::string summary;
    if (!o.line.empty()) {
      const auto slash = o.line.find('/');
      if (slash == std::string::npos) throw UsageError("--line must look like M/Q");
      std::int64_t m = 0;
      const std::string ms = o.line.substr(0, slash);
      const auto [ptr, ec] = std::from_chars(ms.data(), ms.data() + ms.size(), m);
      if (ec != std::errc() || ptr != ms.data() + ms.size()) throw UsageError("bad slope in --line");
      line = BoundingLine{m, ParseU64(o.line.substr(slash + 1), "--line"), o.cfg.j};
      if (line->q == 0) throw UsageError("q must be positive");
      const LineCheck check = CheckBoundingLine(comp, *line, a_lo, a_hi);
      summary = "line " + o.line + ": " + (check.valid() ? "valid" : "invalid") + ", " +
                std::to_string(check.violations) + " of " + std::to_string(check.checked) +
                " points on the wrong side";
      if (check.first_violation) {
        summary += ", first at (" + std::to_string(check.first_violation->first) + "," +
                   std::to_string(check.first_violation->second) + ")";
      }
    } else {
      LineSearchLimits limits;
      if (o.q_max) limits.q_max = *o.q_max;
      line = BoundingLineSearch(ctx, o.cfg.n, o.cfg.j, *it, a_lo, a_hi, limits);
      summary = line ? "found m=" + std::to_string(line->m) + " q=" + std::to_string(line->q)
                     : std::string("no line within the search limits");
    }
    if (f == Format::kCsv) {
      std::ostringstream os;
      os << "a,f\n";
      for (u64 a = a_lo; a <= a_hi; ++a) os << a << ',' << comp(a) << '\n';
      Emit(os.str());
    } else {
      json doc;
      doc["p"] = ctx.p();
      doc["n"] = o.cfg.n;
      doc["j"] = o.cfg.j;
      doc["root"] = *it;
      doc["range"] = {a_lo, a_hi};
      if (line) {
        doc["m"] = line->m;
        doc["q"] = line->q;
      } else {
        doc["m"] = nullptr;
        doc["q"] = nullptr;
      }
      doc["summary"] = summary;
      Emit(doc.dump(2) + "\n");
    }
    Summary(summary);
  }

  void Curve() {
    ResolveFormat(Format::kCsv, {Format::kCsv});
    const auto points = CurveLatticePoints(o.cfg.n, o.z);
    Emit(emit::PairsCsv(points));
    Summary("curve n=" + std::to_string(o.cfg.n) + " z=" + std::to_string(o.z) + ": " +
            std::to_string(points.size()) + " lattice points");
  }

  void HTable() {
    const Format f = ResolveFormat(Format::kCsv, {Format::kCsv, Format::kPgm});
    const PrimeContext ctx = Context(o.cfg.j + 1);
    const u64 p = ctx.p();
    const unsigned j = o.cfg.j;
    emit::Grid grid;
    std::string label;
    if (j == 1) {
      grid = emit::Grid(p - 1, p);
      label = "s";
      for (u64 s = 0; s + 1 < p; ++s) {
        for (u64 r = 0; r < p; ++r) {
          grid.at(s, r) = HEval(ctx, Shift(), 1, s, DigitVector(p, {r})).value;
        }
      }
    } else {
      if (!o.s) throw UsageError("--s is required for j >= 2");
      const u64 head = ctx.modulus(j - 1);
      grid = emit::Grid(head, p);
      label = "prefix";
      for (u64 prefix = 0; prefix < head; ++prefix) {
        for (u64 r = 0; r < p; ++r) {
          const DigitVector digits = DigitVector::FromValue(p, prefix + r * head, j);
          grid.at(prefix, r) = HEval(ctx, Shift(), j, *o.s, digits).value;
        }
      }
    }
    Emit(f == Format::kPgm ? emit::GridPgm(grid, p - 1) : emit::GridCsv(grid, label));
    Summary("h table p=" + std::to_string(p) + " a=" + std::to_string(Shift()) + " j=" +
            std::to_string(j) + ": " + std::to_string(grid.rows) + "x" +
            std::to_string(grid.cols));
  }

  void ATable() {
    ResolveFormat(Format::kCsv, {Format::kCsv});
    const PrimeContext ctx = Context(o.cfg.j + 1);
    const u64 p = ctx.p();
    const unsigned j = o.cfg.j;
    const u64 cols = ctx.modulus(j - 1);
    emit::Grid grid(p - 1, cols);
    for (u64 s = 0; s + 1 < p; ++s) {
      for (u64 prefix = 0; prefix < cols; ++prefix) {
        grid.at(s, prefix) =
            ZipperDigit(ctx, Shift(), j, s, DigitVector::FromValue(p, prefix, j - 1));
      }
    }
    if (j == 1) {
      std::vector<Point> rows;
      for (u64 s = 0; s + 1 < p; ++s) rows.emplace_back(s, grid.at(s, 0));
      Emit(emit::PairsCsv(rows, "s,A"));
      std::vector<u64> values;
      for (const auto& row : rows) values.push_back(row.second);
      Summary("A: " + JoinU64(values));
    } else {
      Emit(emit::GridCsv(grid, "s"));
      Summary("A table p=" + std::to_string(p) + " a=" + std::to_string(Shift()) + " j=" +
              std::to_string(j) + ": " + std::to_string(grid.rows) + "x" +
              std::to_string(grid.cols));
    }
  }

  void Zipper() {
    ResolveFormat(Format::kJson, {Format::kJson});
    const PrimeContext ctx = Context(o.cfg.n);
    const ZipperResult result = ZipperSolve(ctx, o.cfg.n, o.shift);
    Emit(ZipperJson(result));
    std::string summary = "zipper p=" + std::to_string(result.p) + " n=" +
                          std::to_string(result.n) + " g=" + std::to_string(result.g) + ":";
    for (const auto& shift : result.shifts) {
      summary += " a=" + std::to_string(shift.a);
      for (unsigned k = 1; k <= result.max_level; ++k) {
        const auto count = std::count_if(shift.solutions.begin(), shift.solutions.end(),
                                         [k](const ZipperSolution& s) { return s.level >= k; });
        summary += " level" + std::to_string(k) + "=" + std::to_string(count);
      }
    }
    Summary(summary);
  }

  void Profiles() {
    ResolveFormat(Format::kCsv, {Format::kCsv});
    const PrimeContext ctx = Context(3);
    const auto profiles = HProfiles(ctx, Shift());
    const auto zeros = CommonZeros(profiles);
    if (!o.cfg.output.empty()) {
      if (o.cfg.output == "-") throw UsageError("profiles writes a directory, not stdout");
      std::filesystem::create_directories(o.cfg.output);
      const char* stems[] = {"h1_base", "h1_shift", "h2_base", "h2_shift"};
      for (std::size_t i = 0; i < profiles.size(); ++i) {
        const std::string stem = stems[i];
        emit::WriteFileAtomic(o.cfg.output / (stem + ".csv"), ProfileCsv(profiles[i]));
        emit::WriteFileAtomic(o.cfg.output / (stem + "_diff.csv"), DerivativeCsv(profiles[i]));
        emit::WriteFileAtomic(o.cfg.output / (stem + "_diff_hist.csv"),
                              SemilinearityCsv(SemilinearityReport(profiles[i])));
      }
    }
    Summary("profiles p=" + std::to_string(ctx.p()) + " a=" + std::to_string(Shift()) +
            ": common zeros " + (zeros.empty() ? std::string("none") : JoinU64(zeros)));
  }

  void ShiftCheck() {
    ResolveFormat(Format::kJson, {Format::kJson});
    const PrimeContext ctx = Context(o.cfg.j + 1);
    std::vector<ShiftReading> readings;
    for (ShiftReading r :
         {ShiftReading::kDigitwise, ShiftReading::kWithCarries, ShiftReading::kExact}) {
      if (o.reading == "all" || o.reading == ShiftReadingName(r)) readings.push_back(r);
    }
    if (readings.empty()) throw UsageError("unknown reading '" + o.reading + "'");
    const auto samples = FullShiftDomain(ctx.p(), o.cfg.j);
    json doc;
    doc["p"] = ctx.p();
    doc["g"] = ctx.g();
    doc["a"] = Shift();
    doc["j"] = o.cfg.j;
    doc["readings"] = json::array();
    std::string summary = "shift check a=" + std::to_string(Shift()) + " j=" +
                          std::to_string(o.cfg.j) + ":";
    for (ShiftReading r : readings) {
      const ShiftReport report = ShiftIdentityReport(ctx, Shift(), o.cfg.j, samples, r);
      json entry;
      entry["reading"] = ShiftReadingName(r);
      entry["evaluated"] = report.evaluated;
      entry["agreements"] = report.agreements;
      if (report.first_counterexample) {
        const auto& c = *report.first_counterexample;
        entry["first_counterexample"] = {{"s", c.sample.s},
                                         {"r", c.sample.r.digits()},
                                         {"lhs", c.lhs},
                                         {"rhs", c.rhs}};
      } else {
        entry["first_counterexample"] = nullptr;
      }
      doc["readings"].push_back(std::move(entry));
      summary += std::string(" ") + ShiftReadingName(r) + "=" +
                 std::to_string(report.agreements) + "/" + std::to_string(report.evaluated);
    }
    Emit(doc.dump(2) + "\n");
    Summary(summary);
  }

  void S0() {
    ResolveFormat(Format::kCsv, {Format::kCsv});
    const PrimeContext ctx = Context(o.cfg.j + 1);
    const S0Search search = ExtractS0(ctx, Shift(), o.cfg.j);
    std::ostringstream os;
    os << "s,slope\n";
    for (std::size_t s = 0; s < search.slopes.size(); ++s) os << s << ',' << search.slopes[s] << '\n';
    Emit(os.str());
    Summary(search.s0 ? "s0=" + std::to_string(*search.s0) : std::string("s0=none"));
  }

  void Reproduce() {
    const std::filesystem::path base = o.cfg.output.empty() ? "repro" : o.cfg.output;
    const std::filesystem::path dir = o.exact_dir ? base : TimestampedDir(base);
    const ReproduceReport report = ReproduceAll(dir, Cache());
    std::size_t pass = 0, fail = 0;
    for (const auto& e : report.entries) {
      if (e.status == ManifestEntry::Status::kPass) ++pass;
      if (e.status == ManifestEntry::Status::kFail) {
        ++fail;
        err << "FAIL " << e.name << ": " << e.detail << '\n';
      }
    }
    out << "reproduce " << dir.string() << ": " << pass << " pass, " << fail << " fail\n";
    if (fail > 0) throw Error(ErrorKind::kInvalidArgument, "reproduction mismatch");
  }
};

int ExitFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime:
    case ErrorKind::kNotPrimitive:
    case ErrorKind::kLevelOutOfRange:
    case ErrorKind::kWidthOverflow:
    case ErrorKind::kDivisibility:
    case ErrorKind::kInvalidArgument:
      return kExitUsage;
    case ErrorKind::kNonInvertible:
    case ErrorKind::kInexactDivision:
    case ErrorKind::kNonlinear:
    case ErrorKind::kZeroSlope:
      return kExitComputation;
  }
  return kExitComputation;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.cfg.cache_dir = LogTableCache::DefaultDir();

  CLI::App app{"Fermat tiles, Exp/Log digits and zipper relations modulo prime powers"};
  app.require_subcommand(1);
  std::string output;
  std::string cache_dir;

  auto add_p = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", o.p, "odd prime")->required();
    sub->add_option("-g,--generator", o.g, "primitive root override");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "output file ('-' for stdout)");
    sub->add_option("--format", o.format, "csv, json or pgm");
    sub->add_option("--cache-dir", cache_dir, "log table cache directory");
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("-n", o.cfg.n, "exponent n")->required()->check(CLI::Range(2u, 1u << 20));
  };
  auto add_j = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-j,--level", o.cfg.j, "level j")->check(CLI::Range(1u, 62u));
    if (required) opt->required();
  };
  auto add_a = [&](CLI::App* sub) { sub->add_option("-a,--shift", o.shift, "shift a"); };

  auto* roots = app.add_subcommand("roots", "solutions of x^n == -1 mod p");
  add_p(roots), add_n(roots), add_common(roots);
  auto* tile = app.add_subcommand("tile", "points of the tile mod p^j");
  add_p(tile), add_n(tile), add_j(tile, true), add_common(tile);
  auto* box = app.add_subcommand("box", "tile points inside [0, p]^2");
  add_p(box), add_n(box), add_j(box, true), add_common(box);
  auto* theta = app.add_subcommand("theta", "component counts inside the box");
  add_n(theta), add_j(theta, true), add_common(theta);
  theta->add_option("--primes", o.primes, "A..B or a comma list")->required();
  auto* bline = app.add_subcommand("bline", "check or search a bounding line");
  add_p(bline), add_n(bline), add_j(bline, true), add_common(bline);
  bline->add_option("-x,--root", o.root, "root of x^n == -1 mod p")->required();
  bline->add_option("--range", o.range, "a1 range LO..HI (default 0..p^(j-1))");
  bline->add_option("--line", o.line, "slope and denominator M/Q to check");
  bline->add_option("--q-max", o.q_max, "largest q searched (default p)");
  auto* curve = app.add_subcommand("curve", "lattice points of x^n + y^n = z^n");
  add_n(curve), add_common(curve);
  curve->add_option("-z", o.z, "z")->required();
  auto* htable = app.add_subcommand("htable", "digit function table");
  add_p(htable), add_a(htable), add_j(htable, true), add_common(htable);
  htable->add_option("--s", o.s, "fixed s for j >= 2");
  auto* atable = app.add_subcommand("atable", "zipper digit table");
  add_p(atable), add_a(atable), add_j(atable, true), add_common(atable);
  auto* zipper = app.add_subcommand("zipper", "search zipper solutions");
  add_p(zipper), add_n(zipper), add_a(zipper), add_common(zipper);
  auto* profiles = app.add_subcommand("profiles", "digit profiles along the zipper chains");
  add_p(profiles), add_a(profiles), add_common(profiles);
  auto* shift = app.add_subcommand("shift-check", "check the shift identity exhaustively");
  add_p(shift), add_a(shift), add_j(shift, true), add_common(shift);
  shift->add_option("--reading", o.reading, "digitwise, carries, exact or all");
  auto* s0 = app.add_subcommand("s0", "slope offset of the linear forms");
  add_p(s0), add_a(s0), add_j(s0, true), add_common(s0);
  auto* repro = app.add_subcommand("reproduce", "regenerate every published table");
  repro->add_option("-o,--output", output, "base directory (default repro)");
  repro->add_option("--cache-dir", cache_dir, "log table cache directory");
  repro->add_flag("--exact-dir", o.exact_dir, "write into the output directory itself");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  o.cfg.subcommand = chosen->get_name();
  o.cfg.output = output;
  if (!cache_dir.empty()) o.cfg.cache_dir = cache_dir;
  o.cfg.p = o.p;
  o.cfg.g = o.g;
  o.cfg.a = o.shift.value_or(0);

  Runner runner{o, out, err};
  try {
    const std::string& name = o.cfg.subcommand;
    if (name == "roots") runner.Roots();
    else if (name == "tile") runner.Tile();
    else if (name == "box") runner.Box();
    else if (name == "theta") runner.Theta();
    else if (name == "bline") runner.Bline();
    else if (name == "curve") runner.Curve();
    else if (name == "htable") runner.HTable();
    else if (name == "atable") runner.ATable();
    else if (name == "zipper") runner.Zipper();
    else if (name == "profiles") runner.Profiles();
    else if (name == "shift-check") runner.ShiftCheck();
    else if (name == "s0") runner.S0();
    else if (name == "reproduce") runner.Reproduce();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (o.cfg.subcommand == "reproduce") return kExitComputation;
    return ExitFor(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace fermatmod::cli
