// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "fermatmod/arith.hpp"
#include "fermatmod/simd/affine.hpp"

namespace fermatmod::simd::detail {

namespace {

struct Lanes {
  __m256i v;
  __m256i inc;
  __m256i mod;
  __m256i mod_minus_one;
};

// Lane i starts at v_i; every step advances all four lanes by 4 terms.
Lanes Start(const AffineSeq& seq) {
  const u64 m = seq.modulus;
  const u64 v0 = seq.first;
  const u64 v1 = AddMod(v0, seq.step, m);
  const u64 v2 = AddMod(v1, seq.step, m);
  const u64 v3 = AddMod(v2, seq.step, m);
  const u64 inc = MulMod(4 % m, seq.step, m);
  return {
      _mm256_setr_epi64x(static_cast<long long>(v0), static_cast<long long>(v1),
                         static_cast<long long>(v2), static_cast<long long>(v3)),
      _mm256_set1_epi64x(static_cast<long long>(inc)),
      _mm256_set1_epi64x(static_cast<long long>(m)),
      _mm256_set1_epi64x(static_cast<long long>(m - 1)),
  };
}

inline void Advance(Lanes& l) {
  // v + inc < 2M < 2^63, so the signed compare is exact.
  const __m256i sum = _mm256_add_epi64(l.v, l.inc);
  const __m256i wrap = _mm256_cmpgt_epi64(sum, l.mod_minus_one);
  l.v = _mm256_sub_epi64(sum, _mm256_and_si256(wrap, l.mod));
}

// Lane mask of lo <= v < hi, with hi already clamped to <= M.
inline __m256i InRange(__m256i v, __m256i lo_minus_one, __m256i hi) {
  return _mm256_and_si256(_mm256_cmpgt_epi64(v, lo_minus_one), _mm256_cmpgt_epi64(hi, v));
}

u64 LaneValue(const AffineSeq& seq, u64 k) {
  return AddMod(seq.first, MulMod(k % seq.modulus, seq.step, seq.modulus), seq.modulus);
}

}  // namespace

void FillAvx2(const AffineSeq& seq, std::span<std::uint64_t> out) {
  Lanes l = Start(seq);
  const std::size_t n = out.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), l.v);
    Advance(l);
  }
  if (k < n) FillScalar({LaneValue(seq, k), seq.step, seq.modulus}, out.subspan(k));
}

std::uint64_t CountAvx2(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                        std::uint64_t hi) {
  hi = std::min(hi, seq.modulus);
  if (lo >= hi) return 0;
  Lanes l = Start(seq);
  const __m256i lo_m1 = _mm256_set1_epi64x(static_cast<long long>(lo) - 1);
  const __m256i hi_v = _mm256_set1_epi64x(static_cast<long long>(hi));
  // Each in-range lane contributes -1; negate at the end.
  __m256i acc = _mm256_setzero_si256();
  u64 k = 0;
  for (; k + 4 <= count; k += 4) {
    acc = _mm256_add_epi64(acc, InRange(l.v, lo_m1, hi_v));
    Advance(l);
  }
  alignas(32) long long parts[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(parts), acc);
  u64 n = static_cast<u64>(-(parts[0] + parts[1] + parts[2] + parts[3]));
  if (k < count) n += CountScalar({LaneValue(seq, k), seq.step, seq.modulus}, count - k, lo, hi);
  return n;
}

void SelectAvx2(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo, std::uint64_t hi,
                std::vector<std::uint64_t>& out) {
  hi = std::min(hi, seq.modulus);
  if (lo >= hi) return;
  Lanes l = Start(seq);
  const __m256i lo_m1 = _mm256_set1_epi64x(static_cast<long long>(lo) - 1);
  const __m256i hi_v = _mm256_set1_epi64x(static_cast<long long>(hi));
  u64 k = 0;
  for (; k + 4 <= count; k += 4) {
    auto bits = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_castsi256_pd(InRange(l.v, lo_m1, hi_v))));
    while (bits != 0) {
      out.push_back(k + static_cast<u64>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
    Advance(l);
  }
  if (k < count) {
    const std::size_t before = out.size();
    SelectScalar({LaneValue(seq, k), seq.step, seq.modulus}, count - k, lo, hi, out);
    for (std::size_t i = before; i < out.size(); ++i) out[i] += k;
  }
}

}  // namespace fermatmod::simd::detail
