#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermatmod/arith.hpp"

namespace fermatmod {

// A value in canonical form 0 <= value < modulus.
struct Residue {
  u64 value = 0;
  u64 modulus = 1;

  Residue() = default;
  Residue(u64 v, u64 m) : value(v % m), modulus(m) {}

  friend bool operator==(const Residue&, const Residue&) = default;
};

// phi(p^j) = (p - 1) * p^(j - 1).
u64 TotientPower(u64 p, unsigned j);

// Smallest g >= 2 primitive mod p; if g fails to generate mod p^2 the
// result is g + p, which does. Throws kNotPrime for composite or even p.
u64 FindPrimitiveRoot(u64 p);

// An odd prime, a generator g of every Z*_{p^j}, and Exp/Log at levels
// 1..j_max. Only the level-1 log table is materialised; higher levels use
// modular exponentiation and digit lifting. Immutable after construction.
class PrimeContext {
 public:
  // Largest prime accepted; the level-1 table stores 32-bit exponents.
  static constexpr u64 kMaxPrime = (u64{1} << 31) - 1;

  // g defaults to FindPrimitiveRoot(p). An explicit g must pass the
  // primitivity certificate at levels 1 and 2.
  PrimeContext(u64 p, unsigned j_max, std::optional<u64> g = std::nullopt);

  // Adopts a precomputed level-1 log table (e.g. from the cache). The table
  // is validated: log1[x] must satisfy g^log1[x] == x for x in 1..p-1.
  PrimeContext(u64 p, unsigned j_max, u64 g, std::vector<std::uint32_t> log1);

  u64 p() const { return p_; }
  u64 g() const { return g_; }
  unsigned j_max() const { return j_max_; }

  // p^j and phi(p^j) for 0 <= j <= j_max (p^0 = 1, phi(p^0) = 1).
  u64 modulus(unsigned j) const;
  u64 totient(unsigned j) const;

  // g^s mod p^j. s may be any non-negative integer; it is reduced mod
  // phi(p^j) first.
  Residue Exp(unsigned j, u64 s) const;

  // The unique s in Z_{phi(p^j)} with g^s == x (mod p^j).
  Residue Log(unsigned j, u64 x) const;

  // Level-1 table, indexed by x in [0, p); entry 0 is unused.
  const std::vector<std::uint32_t>& log1_table() const { return log1_; }

  // exp(j, phi(p^j)/q) != 1 for every prime q | phi(p^j).
  bool IsPrimitiveAt(unsigned j) const;

 private:
  void Init(std::optional<u64> g);
  void CheckLevel(unsigned j) const;
  void InitPowers();

  u64 p_;
  u64 g_;
  unsigned j_max_;
  std::vector<u64> pow_;  // p^0 .. p^j_max
  std::vector<std::uint32_t> log1_;
};

std::vector<std::uint32_t> BuildLog1Table(u64 p, u64 g);

// Certificate that g generates Z*_{p^j}: g^(phi/q) != 1 for all q | phi.
bool IsPrimitiveModPrimePower(u64 g, u64 p, unsigned j);

}  // namespace fermatmod
