#include <cstdlib>
#include <string_view>

#include "fermatmod/simd/affine.hpp"

namespace fermatmod::simd {

const char* BackendName(Backend b) {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

bool Available(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(FERMATMOD_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Backend Active() {
  static const Backend chosen = [] {
    if (const char* env = std::getenv("FERMATMOD_SIMD"); env != nullptr) {
      if (std::string_view(env) == "scalar") return Backend::kScalar;
    }
    return Available(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
  }();
  return chosen;
}

namespace {

[[maybe_unused]] bool UseVector(Backend b, const AffineSeq& seq) {
  return b == Backend::kAvx2 && Available(b) && seq.modulus < detail::kVectorModulusLimit;
}

}  // namespace

void AffineFill(const AffineSeq& seq, std::span<std::uint64_t> out, Backend b) {
#if defined(FERMATMOD_HAVE_AVX2)
  if (UseVector(b, seq)) return detail::FillAvx2(seq, out);
#else
  (void)b;
#endif
  detail::FillScalar(seq, out);
}

std::uint64_t AffineCountInRange(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                                 std::uint64_t hi, Backend b) {
#if defined(FERMATMOD_HAVE_AVX2)
  if (UseVector(b, seq)) return detail::CountAvx2(seq, count, lo, hi);
#else
  (void)b;
#endif
  return detail::CountScalar(seq, count, lo, hi);
}

void AffineSelectInRange(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                         std::uint64_t hi, std::vector<std::uint64_t>& out, Backend b) {
#if defined(FERMATMOD_HAVE_AVX2)
  if (UseVector(b, seq)) return detail::SelectAvx2(seq, count, lo, hi, out);
#else
  (void)b;
#endif
  detail::SelectScalar(seq, count, lo, hi, out);
}

}  // namespace fermatmod::simd
