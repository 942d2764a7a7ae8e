#include "fermatmod/log_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fermatmod/emit.hpp"
#include "fermatmod/error.hpp"

namespace fermatmod {

namespace {

bool ParseRow(const std::string& line, u64& a, u64& b) {
  std::istringstream is(line);
  char comma = 0;
  if (!(is >> a >> comma >> b) || comma != ',') return false;
  is >> std::ws;
  return is.eof();
}

}  // namespace

std::filesystem::path LogTableCache::DefaultDir() {
  if (const char* env = std::getenv("FERMATMOD_CACHE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return ".fermatmod-cache";
}

std::filesystem::path LogTableCache::PathFor(u64 p, u64 g) const {
  return dir_ / ("log_p" + std::to_string(p) + "_g" + std::to_string(g) + ".csv");
}

std::optional<std::vector<std::uint32_t>> LogTableCache::ReadTable(u64 p, u64 g) const {
  std::ifstream in(PathFor(p, g));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "p,g,j") return std::nullopt;
  u64 fp = 0, fg = 0, fj = 0;
  {
    if (!std::getline(in, line)) return std::nullopt;
    std::istringstream is(line);
    char c1 = 0, c2 = 0;
    if (!(is >> fp >> c1 >> fg >> c2 >> fj) || c1 != ',' || c2 != ',') return std::nullopt;
  }
  if (fp != p || fg != g || fj != 1) return std::nullopt;
  if (!std::getline(in, line) || line != "x,s") return std::nullopt;

  std::vector<std::uint32_t> table(p, 0);
  std::vector<bool> seen(p, false);
  u64 rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    u64 x = 0, s = 0;
    if (!ParseRow(line, x, s)) return std::nullopt;
    if (x == 0 || x >= p || s >= p - 1 || seen[x]) return std::nullopt;
    if (PowMod(g, s, p) != x) return std::nullopt;
    seen[x] = true;
    table[x] = static_cast<std::uint32_t>(s);
    ++rows;
  }
  if (rows != p - 1) return std::nullopt;
  return table;
}

void LogTableCache::Store(const PrimeContext& ctx) const {
  std::ostringstream os;
  os << "p,g,j\n" << ctx.p() << ',' << ctx.g() << ",1\nx,s\n";
  const auto& table = ctx.log1_table();
  for (u64 x = 1; x < ctx.p(); ++x) os << x << ',' << table[x] << '\n';
  emit::WriteFileAtomic(PathFor(ctx.p(), ctx.g()), os.str());
}

PrimeContext LogTableCache::Load(u64 p, unsigned j_max, std::optional<u64> g, bool* hit) const {
  const u64 gen = g ? *g : FindPrimitiveRoot(p);
  if (auto table = ReadTable(p, gen)) {
    if (hit) *hit = true;
    return PrimeContext(p, j_max, gen, std::move(*table));
  }
  if (hit) *hit = false;
  PrimeContext ctx(p, j_max, gen);
  try {
    Store(ctx);
  } catch (const std::exception&) {
    // An unwritable cache directory only costs a recompute next time.
  }
  return ctx;
}

}  // namespace fermatmod
