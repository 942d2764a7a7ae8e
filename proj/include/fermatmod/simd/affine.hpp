#pragma once

// Kernels over affine residue sequences v_k = (first + k * step) mod M.
//
// Every tile component is such a sequence (v_k = k * slope mod p^j), and
// the tile, box and theta scans reduce to filling, counting or selecting
// over one. The scalar kernels are the reference; the AVX2 kernels walk
// four lanes with an add/conditional-subtract recurrence (no division)
// and must agree with the scalar ones bit for bit.

#include <cstdint>
#include <span>
#include <vector>

namespace fermatmod::simd {

enum class Backend { kScalar, kAvx2 };

const char* BackendName(Backend b);

// Compiled in and supported by the running CPU.
bool Available(Backend b);

// Best available backend. FERMATMOD_SIMD=scalar forces the scalar path.
Backend Active();

struct AffineSeq {
  std::uint64_t first = 0;  // < modulus
  std::uint64_t step = 0;   // < modulus
  std::uint64_t modulus = 1;
};

// out[k] = v_k for k < out.size().
void AffineFill(const AffineSeq& seq, std::span<std::uint64_t> out, Backend b = Active());

// Number of k < count with lo <= v_k < hi.
std::uint64_t AffineCountInRange(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                                 std::uint64_t hi, Backend b = Active());

// Appends every k < count with lo <= v_k < hi, in increasing order.
void AffineSelectInRange(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                         std::uint64_t hi, std::vector<std::uint64_t>& out,
                         Backend b = Active());

namespace detail {

void FillScalar(const AffineSeq& seq, std::span<std::uint64_t> out);
std::uint64_t CountScalar(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                          std::uint64_t hi);
void SelectScalar(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo, std::uint64_t hi,
                  std::vector<std::uint64_t>& out);

// Lane arithmetic is signed 64-bit, so the vector path needs M < 2^62.
inline constexpr std::uint64_t kVectorModulusLimit = std::uint64_t{1} << 62;

#if defined(FERMATMOD_HAVE_AVX2)
void FillAvx2(const AffineSeq& seq, std::span<std::uint64_t> out);
std::uint64_t CountAvx2(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo,
                        std::uint64_t hi);
void SelectAvx2(const AffineSeq& seq, std::uint64_t count, std::uint64_t lo, std::uint64_t hi,
                std::vector<std::uint64_t>& out);
#endif

}  // namespace detail

}  // namespace fermatmod::simd
