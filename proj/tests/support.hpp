// Shared helpers for the oracle-style tests: R = Z4 + vZ4 arithmetic on
// (a, b) pairs and exhaustive materialization of length-2 codes at n = 1.
#ifndef NEGA_TESTS_SUPPORT_HPP
#define NEGA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "nega/factorbase.hpp"
#include "nega/ideals.hpp"
#include "nega/length2.hpp"
#include "nega/negacode.hpp"

namespace nega::testsupport {

using RSym = std::array<std::uint8_t, 2>;  // a + bv
using RVec = std::vector<RSym>;            // word in R^N

inline RSym r_add(RSym x, RSym y) {
    return {static_cast<std::uint8_t>((x[0] + y[0]) & 3),
            static_cast<std::uint8_t>((x[1] + y[1]) & 3)};
}

inline RSym r_mul(RSym x, RSym y) {
    return {static_cast<std::uint8_t>((x[0] * y[0]) & 3),
            static_cast<std::uint8_t>((x[0] * y[1] + x[1] * y[0] + 2 * x[1] * y[1]) & 3)};
}

inline RSym r_neg(RSym x) {
    return {static_cast<std::uint8_t>((4 - x[0]) & 3), static_cast<std::uint8_t>((4 - x[1]) & 3)};
}

/// All 256 words of R^2.
inline std::vector<RVec> all_r2_words() {
    std::vector<RVec> out;
    for (int a0 = 0; a0 < 4; ++a0)
        for (int b0 = 0; b0 < 4; ++b0)
            for (int a1 = 0; a1 < 4; ++a1)
                for (int b1 = 0; b1 < 4; ++b1)
                    out.push_back({{static_cast<std::uint8_t>(a0), static_cast<std::uint8_t>(b0)},
                                   {static_cast<std::uint8_t>(a1), static_cast<std::uint8_t>(b1)}});
    return out;
}

/// Materializes a length-2 code over R at n = 1 from its single component
/// spec, via the Xi identification: (alpha, beta) in K1 + vK1 with
/// alpha = a0 + a1 x, beta = b0 + b1 x maps to ((a0,b0), (a1,b1)).
inline std::set<RVec> materialize_n1(const FactorizationContext&, const KTable& tab,
                                     const NegacyclicCode& code) {
    const PairSet ideal = materialize_ideal(code.components[0], tab);
    std::set<RVec> words;
    for (const auto pe : ideal) {
        const std::uint32_t ai = pe / tab.size(), bi = pe % tab.size();
        const Z4Poly& al = tab.elem(ai);
        const Z4Poly& be = tab.elem(bi);
        words.insert({{al.coeff(0), be.coeff(0)}, {al.coeff(1), be.coeff(1)}});
    }
    return words;
}

inline RSym inner_product(const RVec& x, const RVec& y) {
    RSym s{0, 0};
    for (std::size_t i = 0; i < x.size(); ++i) s = r_add(s, r_mul(x[i], y[i]));
    return s;
}

/// Exhaustive Euclidean dual of a code in R^2.
inline std::set<RVec> brute_dual_r2(const std::set<RVec>& code) {
    std::set<RVec> out;
    for (const auto& w : all_r2_words()) {
        bool ok = true;
        for (const auto& c : code)
            if (inner_product(w, c) != RSym{0, 0}) {
                ok = false;
                break;
            }
        if (ok) out.insert(w);
    }
    return out;
}

}  // namespace nega::testsupport

#endif
