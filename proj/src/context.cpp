#include "fermatmod/context.hpp"

#include <string>

#include "fermatmod/error.hpp"

namespace fermatmod {

namespace {

void RequireOddPrime(u64 p) {
  if (p < 3 || !IsPrime(p)) {
    throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

u64 TotientPower(u64 p, unsigned j) {
  if (j == 0) return 1;
  u64 t = p - 1;
  for (unsigned i = 1; i < j; ++i) t *= p;
  return t;
}

bool IsPrimitiveModPrimePower(u64 g, u64 p, unsigned j) {
  const u64 m = *CheckedPow(p, j, ~u64{0});
  if (g % p == 0) return false;
  const u64 phi = TotientPower(p, j);
  for (u64 q : PrimeFactors(p - 1)) {
    if (PowMod(g, phi / q, m) == 1) return false;
  }
  if (j >= 2 && PowMod(g, phi / p, m) == 1) return false;
  return true;
}

u64 FindPrimitiveRoot(u64 p) {
  RequireOddPrime(p);
  if (p > PrimeContext::kMaxPrime) {
    throw Error(ErrorKind::kInvalidArgument, "prime too large for a level-1 table");
  }
  const auto factors = PrimeFactors(p - 1);
  u64 g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (u64 q : factors) {
      if (PowMod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  // Primitive mod p^2 iff g^(p-1) != 1 mod p^2; when it fails, g + p works.
  const u64 p2 = p * p;
  if (PowMod(g, p - 1, p2) == 1) g += p;
  return g;
}

std::vector<std::uint32_t> BuildLog1Table(u64 p, u64 g) {
  std::vector<std::uint32_t> table(p, 0);
  u64 x = 1;
  for (u64 s = 0; s + 1 < p; ++s) {
    table[x] = static_cast<std::uint32_t>(s);
    x = MulMod(x, g, p);
  }
  return table;
}

PrimeContext::PrimeContext(u64 p, unsigned j_max, std::optional<u64> g)
    : p_(p), g_(0), j_max_(j_max) {
  Init(g);
  log1_ = BuildLog1Table(p_, g_);
}

PrimeContext::PrimeContext(u64 p, unsigned j_max, u64 g, std::vector<std::uint32_t> log1)
    : p_(p), g_(0), j_max_(j_max) {
  Init(g);
  if (log1.size() != p_) {
    throw Error(ErrorKind::kInvalidArgument, "log table has the wrong size");
  }
  for (u64 x = 1; x < p_; ++x) {
    if (log1[x] >= p_ - 1 || PowMod(g_, log1[x], p_) != x) {
      throw Error(ErrorKind::kInvalidArgument,
                  "log table entry for x=" + std::to_string(x) + " is wrong");
    }
  }
  log1_ = std::move(log1);
}

void PrimeContext::Init(std::optional<u64> g) {
  RequireOddPrime(p_);
  if (p_ > kMaxPrime) {
    throw Error(ErrorKind::kInvalidArgument, "prime too large for a level-1 table");
  }
  InitPowers();
  if (g) {
    g_ = *g;
    if (g_ < 2 || !IsPrimitiveModPrimePower(g_, p_, 1) || !IsPrimitiveModPrimePower(g_, p_, 2)) {
      throw Error(ErrorKind::kNotPrimitive,
                  std::to_string(g_) + " does not generate Z*_{p^2} for p=" + std::to_string(p_));
    }
  } else {
    g_ = FindPrimitiveRoot(p_);
  }
}

void PrimeContext::InitPowers() {
  if (j_max_ < 1) throw Error(ErrorKind::kLevelOutOfRange, "j_max must be >= 1");
  pow_.assign(j_max_ + 1, 1);
  for (unsigned j = 1; j <= j_max_; ++j) {
    auto pj = CheckedPow(p_, j);
    if (!pj) {
      throw Error(ErrorKind::kWidthOverflow, "p^" + std::to_string(j) + " exceeds 2^63");
    }
    pow_[j] = *pj;
  }
}

void PrimeContext::CheckLevel(unsigned j) const {
  if (j < 1 || j > j_max_) {
    throw Error(ErrorKind::kLevelOutOfRange,
                "level " + std::to_string(j) + " outside 1.." + std::to_string(j_max_));
  }
}

u64 PrimeContext::modulus(unsigned j) const {
  if (j > j_max_) CheckLevel(j);
  return pow_[j];
}

u64 PrimeContext::totient(unsigned j) const {
  if (j > j_max_) CheckLevel(j);
  return j == 0 ? 1 : pow_[j - 1] * (p_ - 1);
}

Residue PrimeContext::Exp(unsigned j, u64 s) const {
  CheckLevel(j);
  return {PowMod(g_, s % totient(j), pow_[j]), pow_[j]};
}

Residue PrimeContext::Log(unsigned j, u64 x) const {
  CheckLevel(j);
  x %= pow_[j];
  if (x % p_ == 0) {
    throw Error(ErrorKind::kNonInvertible, std::to_string(x) + " is divisible by p");
  }
  u64 s = log1_[x % p_];
  // Lift one base-p digit per level. With s = Log_k(x), write
  // x * g^-s = 1 + p^k * e and g^phi(p^k) = 1 + p^k * w (mod p^(k+1)),
  // w a unit because g is primitive mod p^2. Then t = e / w (mod p).
  for (unsigned k = 1; k < j; ++k) {
    const u64 m = pow_[k + 1];
    const u64 phi_k = totient(k);
    const u64 phi_next = totient(k + 1);
    const u64 ratio = MulMod(x % m, PowMod(g_, phi_next - s, m), m);
    const u64 step = PowMod(g_, phi_k, m);
    if ((ratio - 1) % pow_[k] != 0 || (step - 1) % pow_[k] != 0) {
      throw Error(ErrorKind::kInexactDivision, "log lift lost tower compatibility");
    }
    const u64 e = (ratio - 1) / pow_[k];
    const u64 w = (step - 1) / pow_[k];
    const auto w_inv = InvMod(w % p_, p_);
    if (!w_inv) throw Error(ErrorKind::kNotPrimitive, "g is not primitive mod p^2");
    const u64 t = MulMod(e % p_, *w_inv, p_);
    s += t * phi_k;
  }
  return {s, totient(j)};
}

bool PrimeContext::IsPrimitiveAt(unsigned j) const {
  CheckLevel(j);
  const u64 phi = totient(j);
  std::vector<u64> qs = PrimeFactors(p_ - 1);
  if (j >= 2) qs.push_back(p_);
  for (u64 q : qs) {
    if (Exp(j, phi / q).value == 1) return false;
  }
  return true;
}

}  // namespace fermatmod
