#include "nega/gray.hpp"

#include <stdexcept>

namespace nega {

std::vector<std::uint8_t> theta(const RWord& w) {
    std::vector<std::uint8_t> out(2 * w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto [s, b] = gray_rho(w.sym[i][0], w.sym[i][1]);
        out[2 * i] = s;
        out[2 * i + 1] = b;
    }
    return out;
}

Z4LinearCode gray_image(const Z4LinearCode& code) {
    if (code.length % 2)
        throw std::invalid_argument("gray_image: length must be even (R-symbol pairs)");
    std::vector<std::vector<std::uint8_t>> rows;
    const auto map_row = [&](const std::vector<std::uint8_t>& r) {
        std::vector<std::uint8_t> out(r.size());
        for (std::size_t c = 0; c < r.size(); c += 2) {
            const auto [s, b] = gray_rho(r[c], r[c + 1]);
            out[c] = s;
            out[c + 1] = b;
        }
        return out;
    };
    for (const auto& r : code.gens4) rows.push_back(map_row(r));
    for (const auto& r : code.gens2) rows.push_back(map_row(r));
    return z4_standard_form(std::move(rows), code.length);
}

std::vector<std::uint8_t> z4_to_binary_gray(const std::vector<std::uint8_t>& word) {
    static constexpr std::uint8_t kMap[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    std::vector<std::uint8_t> out(2 * word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        out[2 * i] = kMap[word[i] & 3][0];
        out[2 * i + 1] = kMap[word[i] & 3][1];
    }
    return out;
}

bool is_quasi_twisted(const Z4LinearCode& code) {
    const int L = code.length;
    if (L % 2) throw std::invalid_argument("is_quasi_twisted: length must be even");
    const auto shift2 = [&](const std::vector<std::uint8_t>& r) {
        std::vector<std::uint8_t> out(L);
        out[0] = static_cast<std::uint8_t>((4 - r[L - 2]) & 3);
        out[1] = static_cast<std::uint8_t>((4 - r[L - 1]) & 3);
        for (int k = 2; k < L; ++k) out[k] = r[k - 2];
        return out;
    };
    for (const auto& r : code.gens4)
        if (!z4_member(code, shift2(r))) return false;
    for (const auto& r : code.gens2)
        if (!z4_member(code, shift2(r))) return false;
    return true;
}

}  // namespace nega
