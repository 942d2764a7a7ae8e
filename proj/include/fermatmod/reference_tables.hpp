#pragma once

// Published values the library is expected to reproduce exactly.

#include <array>
#include <cstdint>

namespace fermatmod::reference {

// x^4 == -1 (mod 17) with g = 3, in increasing exponent order.
inline constexpr std::array<std::uint64_t, 4> kRootsP17N4 = {9, 15, 8, 2};

// Exp_1(s) for p = 5, g = 2, s = 0..3.
inline constexpr std::array<std::uint64_t, 4> kExp1P5 = {1, 2, 4, 3};

// h_1^a(s; r) for p = 5, rows s = 0..3, columns r = 0..4.
inline constexpr std::array<std::array<std::uint64_t, 5>, 4> kH1A0P5 = {{
    {0, 3, 1, 4, 2},
    {0, 1, 2, 3, 4},
    {0, 2, 4, 1, 3},
    {1, 0, 4, 3, 2},
}};
inline constexpr std::array<std::array<std::uint64_t, 5>, 4> kH1A3P5 = {{
    {3, 2, 1, 0, 4},
    {2, 0, 3, 1, 4},
    {4, 0, 1, 2, 3},
    {3, 0, 2, 4, 1},
}};

// h_2^0(s; r_0, r_1) for p = 5, rows r_0, columns r_1.
inline constexpr std::array<std::array<std::uint64_t, 5>, 5> kH2A0S3P5 = {{
    {0, 4, 3, 2, 1},
    {0, 4, 3, 2, 1},
    {1, 0, 4, 3, 2},
    {0, 4, 3, 2, 1},
    {1, 0, 4, 3, 2},
}};
inline constexpr std::array<std::array<std::uint64_t, 5>, 5> kH2A0S2P5 = {{
    {0, 2, 4, 1, 3},
    {2, 4, 1, 3, 0},
    {0, 2, 4, 1, 3},
    {0, 2, 4, 1, 3},
    {0, 2, 4, 1, 3},
}};

// A_1^0(s) and A_1^3(s) for p = 5, s = 0..3.
inline constexpr std::array<std::uint64_t, 4> kA1A0P5 = {0, 0, 0, 1};
inline constexpr std::array<std::uint64_t, 4> kA1A3P5 = {3, 1, 1, 1};

// Slope offset of the level-2 linear form for p = 5, a = 0.
inline constexpr std::uint64_t kS0P5A0J2 = 3;

// theta_i^2(p, 4) for the sixteen primes p == 1 (mod 8) up to 401.
inline constexpr std::array<std::uint64_t, 16> kThetaPrimes = {
    17, 41, 73, 89, 97, 113, 137, 193, 233, 241, 257, 281, 313, 337, 353, 401};
inline constexpr std::array<std::array<std::uint64_t, 16>, 4> kThetaN4J2 = {{
    {1, 3, 2, 0, 3, 0, 1, 2, 1, 0, 1, 1, 1, 1, 1, 0},
    {1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 3},
    {1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 3},
    {1, 3, 2, 0, 3, 0, 1, 2, 1, 0, 1, 1, 1, 1, 1, 0},
}};

// p = 97, g = 5, n = 4, a = 12: the first-level solutions are labelled by
// these residues, and the chains split at level 2 by this amount.
inline constexpr std::array<std::uint64_t, 3> kP97Labels = {11, 22, 33};
inline constexpr std::uint64_t kP97LevelTwoDiscrepancy = 3;

// Published bounding line a2 = (-23 a1 + 17^3) / 47 for x = 9, p = 17,
// j = 3 over a1 in [0, 17^2].
inline constexpr std::int64_t kLineM = -23;
inline constexpr std::uint64_t kLineQ = 47;

}  // namespace fermatmod::reference
