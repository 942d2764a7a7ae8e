#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fermatmod/context.hpp"

namespace fermatmod {

// On-disk cache of level-1 log tables, one CSV per (p, g):
//
//   p,g,j
//   97,5,1
//   x,s
//   1,0
//   2,34
//   ...
//
// A cached table is used only after it passes the round-trip check
// g^s == x (mod p) for every row and covers all of Z*_p.
class LogTableCache {
 public:
  explicit LogTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // FERMATMOD_CACHE_DIR if set, otherwise ".fermatmod-cache" in the
  // working directory.
  static std::filesystem::path DefaultDir();

  std::filesystem::path PathFor(u64 p, u64 g) const;

  // Context for (p, g) with j_max levels. Uses the cached table when valid;
  // otherwise computes and (re)writes it. `hit`, when given, reports which.
  PrimeContext Load(u64 p, unsigned j_max, std::optional<u64> g = std::nullopt,
                    bool* hit = nullptr) const;

  void Store(const PrimeContext& ctx) const;

 private:
  std::optional<std::vector<std::uint32_t>> ReadTable(u64 p, u64 g) const;

  std::filesystem::path dir_;
};

}  // namespace fermatmod
