#pragma once

// Command-line front end. Every subcommand prints a one-line summary and,
// with --output, writes its data file atomically.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fermatmod/log_cache.hpp"

namespace fermatmod::cli {

enum class Format { kCsv, kJson, kPgm };

struct RunConfig {
  std::string subcommand;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> g;
  unsigned n = 0;
  unsigned j = 1;
  std::uint64_t a = 0;
  std::filesystem::path output;
  Format format = Format::kCsv;
  std::filesystem::path cache_dir;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// args[0] is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ManifestEntry {
  enum class Status { kPass, kFail, kInfo, kNote };
  Status status = Status::kInfo;
  std::string name;
  std::string detail;
};

struct ReproduceReport {
  std::filesystem::path dir;
  std::vector<ManifestEntry> entries;

  bool passed() const;
  std::string Manifest() const;
};

// Regenerates every published table into `dir` and writes manifest.txt.
ReproduceReport ReproduceAll(const std::filesystem::path& dir, const LogTableCache& cache);

// `base`/repro-YYYYMMDD-HHMMSS, suffixed if it already exists.
std::filesystem::path TimestampedDir(const std::filesystem::path& base);

}  // namespace fermatmod::cli
