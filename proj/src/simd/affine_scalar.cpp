#include "fermatmod/arith.hpp"
#include "fermatmod/simd/affine.hpp"

namespace fermatmod::simd::detail {

void FillScalar(const AffineSeq& seq, std::span<std::uint64_t> out) {
  u64 v = seq.first;
  for (auto& slot : out) {
    slot = v;
    v = AddMod(v, seq.step, seq.modulus);
  }
}

std::uint64_t CountScalar(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                          std::uint64_t hi) {
  u64 v = seq.first;
  u64 n = 0;
  for (u64 k = 0; k < count; ++k) {
    n += (v >= lo && v < hi) ? 1 : 0;
    v = AddMod(v, seq.step, seq.modulus);
  }
  return n;
}

void SelectScalar(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo, std::uint64_t hi,
                  std::vector<std::uint64_t>& out) {
  u64 v = seq.first;
  for (u64 k = 0; k < count; ++k) {
    if (v >= lo && v < hi) out.push_back(k);
    v = AddMod(v, seq.step, seq.modulus);
  }
}

}  // namespace fermatmod::simd::detail
