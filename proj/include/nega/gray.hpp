#ifndef NEGA_GRAY_HPP
#define NEGA_GRAY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "nega/negacode.hpp"

namespace nega {

/// rho(a + bv) = (a+b, b), the Z4-linear Gray map R -> Z4^2.
inline std::array<std::uint8_t, 2> gray_rho(std::uint8_t a, std::uint8_t b) {
    return {static_cast<std::uint8_t>((a + b) & 3), static_cast<std::uint8_t>(b & 3)};
}

/// Lee weight on Z4: 0,1,2,1.
inline int lee_weight_z4(std::uint8_t c) { return (c & 3) == 2 ? 2 : ((c & 3) ? 1 : 0); }
/// Euclidean weight on Z4: 0,1,4,1.
inline int euclidean_weight_z4(std::uint8_t c) { return (c & 3) == 2 ? 4 : ((c & 3) ? 1 : 0); }
/// Lee weight on R: w_L(a+bv) = w_L(a+b) + w_L(b), values 0..4.
inline int lee_weight_r(std::uint8_t a, std::uint8_t b) {
    return lee_weight_z4(static_cast<std::uint8_t>(a + b)) + lee_weight_z4(b);
}

/// theta: componentwise rho, doubling the length.
std::vector<std::uint8_t> theta(const RWord& w);

/// Gray image of an R-flattened Z4 code: maps every generator row pairwise
/// through rho and re-reduces to standard form (rho is a Z4-module
/// isomorphism, so the type is preserved).
Z4LinearCode gray_image(const Z4LinearCode& code);

/// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10 (Hamming weight = Lee weight).
std::vector<std::uint8_t> z4_to_binary_gray(const std::vector<std::uint8_t>& word);

/// Verifies closure of the code under the negacyclic shift by two symbols
/// (negate the wrapped block), via standard-form membership of each shifted
/// generator.
bool is_quasi_twisted(const Z4LinearCode& code);

}  // namespace nega

#endif
