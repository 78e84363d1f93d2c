#include "nega/length2.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nega {

std::vector<KStdRow> k_standard_form(const ChainRing& K, std::vector<KPair> rows) {
    std::vector<KStdRow> out;
    std::vector<KPair> rem;
    for (auto& r : rows) rem.push_back({K.reduce(r[0]), K.reduce(r[1])});
    std::vector<bool> col_used(2, false);
    while (true) {
        // pick the entry of minimal pi-degree over remaining rows and unused columns
        int best_row = -1, best_col = -1, best_deg = 4;
        for (std::size_t ri = 0; ri < rem.size(); ++ri) {
            for (int c = 0; c < 2; ++c) {
                if (col_used[c]) continue;
                const int d = K.pi_degree(rem[ri][c]);
                if (d < best_deg) {
                    best_deg = d;
                    best_row = static_cast<int>(ri);
                    best_col = c;
                }
            }
        }
        if (best_row < 0 || best_deg == 4) break;
        KPair piv = rem[best_row];
        rem.erase(rem.begin() + best_row);
        // normalize: pivot entry becomes exactly f^k
        const Z4Poly unit = K.pi_shift_down(piv[best_col], best_deg);
        const Z4Poly uinv = K.invert_unit(unit);
        piv = {K.mul(piv[0], uinv), K.mul(piv[1], uinv)};
        // eliminate the pivot column from the other rows
        for (auto& r : rem) {
            const Z4Poly& e = r[best_col];
            if (e.is_zero()) continue;
            const Z4Poly c = K.pi_shift_down(e, best_deg);  // ||e|| >= best_deg by minimality
            r = {K.sub(r[0], K.mul(c, piv[0])), K.sub(r[1], K.mul(c, piv[1]))};
        }
        out.push_back({piv, best_col, best_deg});
        col_used[best_col] = true;
        if (col_used[0] && col_used[1]) break;
    }
    for (const auto& r : rem)
        if (!r[0].is_zero() || !r[1].is_zero())
            throw std::logic_error("k_standard_form: nonzero residue row");
    return out;
}

bool k_span_contains(const ChainRing& K, const std::vector<KStdRow>& sf, const KPair& w) {
    KPair t = {K.reduce(w[0]), K.reduce(w[1])};
    for (const auto& row : sf) {
        const Z4Poly& e = t[row.pivot_col];
        if (K.pi_degree(e) < row.pivot_deg) return false;
        const Z4Poly c = K.pi_shift_down(e, row.pivot_deg);
        t = {K.sub(t[0], K.mul(c, row.v[0])), K.sub(t[1], K.mul(c, row.v[1]))};
    }
    return t[0].is_zero() && t[1].is_zero();
}

cpp_int k_span_size(const ChainRing& K, const std::vector<KStdRow>& sf) {
    cpp_int s = 1;
    for (const auto& row : sf) s <<= K.m() * (4 - row.pivot_deg);
    return s;
}

// ------------------------------------------------------------------ KTable

KTable::KTable(const ChainRing& K) : ring_(&K) {
    if (K.m() > 2) throw std::invalid_argument("KTable: ring too large to tabulate (m > 2)");
    const std::size_t n = 2 * static_cast<std::size_t>(K.m());
    size_ = std::uint32_t(1) << (2 * n);
    elems_.reserve(size_);
    std::vector<std::uint8_t> c(n, 0);
    for (std::uint32_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < n; ++j) c[j] = (i >> (2 * j)) & 3;
        elems_.push_back(Z4Poly(std::vector<std::uint8_t>(c)));
    }
    add_.resize(std::size_t(size_) * size_);
    mul_.resize(std::size_t(size_) * size_);
    neg_.resize(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
        neg_[a] = index_of(-elems_[a]);
        for (std::uint32_t b = 0; b < size_; ++b) {
            add_[std::size_t(a) * size_ + b] = index_of(elems_[a] + elems_[b]);
            mul_[std::size_t(a) * size_ + b] = index_of(K.mul(elems_[a], elems_[b]));
        }
    }
    two_ = index_of(Z4Poly::constant(2));
}

std::uint32_t KTable::index_of(const Z4Poly& e) const {
    const Z4Poly r = ring_->reduce(e);
    std::uint32_t i = 0;
    for (std::size_t j = 0; j < r.coeffs().size(); ++j)
        i |= std::uint32_t(r.coeffs()[j]) << (2 * j);
    return i;
}

// -------------------------------------------------------- span materialization

namespace {

// Additive closure of {0} with the given group generators. Every element of a
// Z4-module has additive order dividing 4, so a generator contributes at most
// the cosets S, S+g, S+2g, S+3g.
PairSet additive_closure(const KTable& tab, const std::vector<std::uint32_t>& gens) {
    const std::uint64_t ks = tab.size();
    PairSet s{0};
    auto contains = [&](std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); };
    auto pair_add = [&](std::uint32_t x, std::uint32_t y) {
        const auto xa = static_cast<std::uint32_t>(x / ks), xb = static_cast<std::uint32_t>(x % ks);
        const auto ya = static_cast<std::uint32_t>(y / ks), yb = static_cast<std::uint32_t>(y % ks);
        return static_cast<std::uint32_t>(std::uint64_t(tab.add(xa, ya)) * ks + tab.add(xb, yb));
    };
    for (const auto g : gens) {
        if (contains(g)) continue;
        PairSet next = s;
        std::uint32_t shift = g;
        for (int k = 1; k < 4 && !contains(shift); ++k) {
            for (const auto x : s) next.push_back(pair_add(x, shift));
            shift = pair_add(shift, g);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        s = std::move(next);
    }
    return s;
}

PairSet span_of_rows(const KTable& tab, const std::vector<std::array<std::uint32_t, 2>>& rows) {
    const std::uint64_t ks = tab.size();
    std::vector<std::uint32_t> gens;
    for (const auto& r : rows)
        for (std::uint32_t c = 0; c < tab.size(); ++c)
            gens.push_back(
                static_cast<std::uint32_t>(std::uint64_t(tab.mul(c, r[0])) * ks + tab.mul(c, r[1])));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return additive_closure(tab, gens);
}

std::uint32_t pi_idx(const KTable& tab, int k) { return tab.index_of(tab.ring().pi_pow(k)); }

// representatives of K/<f^l>: sums of T-digit multiples of f^0 .. f^{l-1}
std::vector<std::uint32_t> quotient_reps(const KTable& tab, int l) {
    const ChainRing& K = tab.ring();
    std::vector<std::uint32_t> out{tab.index_of(Z4Poly())};
    for (int j = 0; j < l; ++j) {
        std::vector<std::uint32_t> next;
        for (const auto base : out)
            for (std::uint64_t t = 0; t < K.t_size(); ++t)
                next.push_back(tab.add(base, tab.index_of(K.mul(K.t_elem(t), K.pi_pow(j)))));
        out = std::move(next);
    }
    return out;
}

// f * (K/<f^t>) = { f h : h in K/<f^{t-1}> }
std::vector<std::uint32_t> pi_quotient_reps(const KTable& tab, int t) {
    std::vector<std::uint32_t> out;
    for (const auto h : quotient_reps(tab, t - 1)) out.push_back(tab.mul(pi_idx(tab, 1), h));
    return out;
}

Length2Code make_code(const KTable& tab, std::string family, std::vector<std::uint32_t> params,
                      std::vector<std::array<std::uint32_t, 2>> rows) {
    Length2Code c;
    c.family = std::move(family);
    c.params = std::move(params);
    for (const auto& r : rows) c.rows.push_back({tab.elem(r[0]), tab.elem(r[1])});
    c.elems = span_of_rows(tab, rows);
    return c;
}

}  // namespace

std::vector<Length2Code> enumerate_all_length2(const ChainRing& K) {
    if (K.size_log2_guard() > 12)
        throw std::invalid_argument("enumerate_all_length2: |K| > 4096, too large to materialize");
    const KTable tab(K);
    const std::uint32_t one = tab.index_of(Z4Poly::constant(1));
    std::vector<Length2Code> out;
    // (i) (1, a), a in K
    for (std::uint32_t a = 0; a < tab.size(); ++a)
        out.push_back(make_code(tab, "i", {a}, {{one, a}}));
    // (ii) (f^k, f^k a), a in K/<f^{4-k}>, k = 1..3
    for (int k = 1; k <= 3; ++k) {
        const std::uint32_t pk = pi_idx(tab, k);
        for (const auto a : quotient_reps(tab, 4 - k))
            out.push_back(make_code(tab, "ii", {std::uint32_t(k), a}, {{pk, tab.mul(pk, a)}}));
    }
    // (iii) (f b, 1), b in K/<f^3>
    for (const auto b : quotient_reps(tab, 3))
        out.push_back(make_code(tab, "iii", {b}, {{tab.mul(pi_idx(tab, 1), b), one}}));
    // (iv) (f^{k+1} b, f^k), b in K/<f^{4-k-1}>, k = 1..3
    for (int k = 1; k <= 3; ++k)
        for (const auto b : quotient_reps(tab, 4 - k - 1))
            out.push_back(make_code(tab, "iv", {std::uint32_t(k), b},
                                    {{tab.mul(pi_idx(tab, k + 1), b), pi_idx(tab, k)}}));
    // (v) f^k I2, k = 0..4
    for (int k = 0; k <= 4; ++k) {
        const std::uint32_t pk = pi_idx(tab, k);
        out.push_back(make_code(tab, "v", {std::uint32_t(k)}, {{pk, 0}, {0, pk}}));
    }
    // (vi) [[1, c],[0, f^t]], c in K/<f^t>, t = 1..3
    for (int t = 1; t <= 3; ++t)
        for (const auto c : quotient_reps(tab, t))
            out.push_back(
                make_code(tab, "vi", {std::uint32_t(t), c}, {{one, c}, {0, pi_idx(tab, t)}}));
    // (vii) [[f^k, f^k c],[0, f^{k+t}]], c in K/<f^t>, 1 <= t <= 3-k, k = 1..2
    for (int k = 1; k <= 2; ++k)
        for (int t = 1; t <= 3 - k; ++t)
            for (const auto c : quotient_reps(tab, t)) {
                const std::uint32_t pk = pi_idx(tab, k);
                out.push_back(make_code(tab, "vii", {std::uint32_t(k), std::uint32_t(t), c},
                                        {{pk, tab.mul(pk, c)}, {0, pi_idx(tab, k + t)}}));
            }
    // (viii) [[c, 1],[f^t, 0]], c in f(K/<f^t>), t = 1..3
    for (int t = 1; t <= 3; ++t)
        for (const auto c : pi_quotient_reps(tab, t))
            out.push_back(
                make_code(tab, "viii", {std::uint32_t(t), c}, {{c, one}, {pi_idx(tab, t), 0}}));
    // (ix) [[f^k c, f^k],[f^{k+t}, 0]], c in f(K/<f^t>), 1 <= t <= 3-k, k = 1..2
    for (int k = 1; k <= 2; ++k)
        for (int t = 1; t <= 3 - k; ++t)
            for (const auto c : pi_quotient_reps(tab, t)) {
                const std::uint32_t pk = pi_idx(tab, k);
                out.push_back(make_code(tab, "ix", {std::uint32_t(k), std::uint32_t(t), c},
                                        {{tab.mul(pk, c), pk}, {pi_idx(tab, k + t), 0}}));
            }
    // the families claim one and only one generator matrix per code
    std::map<PairSet, std::size_t> seen;
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto [it, inserted] = seen.emplace(out[i].elems, i);
        if (!inserted)
            throw std::logic_error("enumerate_all_length2: duplicate code across families");
    }
    return out;
}

std::vector<Length2Code> filter_condition2(const ChainRing& K, const KTable& tab,
                                           std::vector<Length2Code> codes, const Z4Poly& omega) {
    const std::uint32_t w2 = tab.index_of(K.mul(omega, K.pi_pow(2)));
    const std::uint64_t ks = tab.size();
    std::vector<Length2Code> out;
    for (auto& c : codes) {
        bool ok = true;
        for (const auto pe : c.elems) {
            const auto a = static_cast<std::uint32_t>(pe / ks), b = static_cast<std::uint32_t>(pe % ks);
            const std::uint64_t img = std::uint64_t(0) * ks + tab.add(a, tab.mul(w2, b));
            if (!std::binary_search(c.elems.begin(), c.elems.end(), static_cast<std::uint32_t>(img))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(c));
    }
    return out;
}

std::string StandardFormTag::to_string() const {
    static const char* names[] = {"", "I", "II", "III", "IV", "V"};
    std::string s = names[cls - '0'];
    s += "-" + std::to_string(variant);
    for (const auto p : params) s += ":" + std::to_string(p);
    return s;
}

StandardFormTag classify_standard_form(const ChainRing& K, const KTable& tab,
                                       const Length2Code& code) {
    const std::uint32_t one = tab.index_of(Z4Poly::constant(1));
    std::vector<std::pair<StandardFormTag, PairSet>> forms;
    const auto add_form = [&](char cls, int variant, std::vector<std::uint32_t> params,
                              std::vector<std::array<std::uint32_t, 2>> rows) {
        forms.push_back({{cls, variant, std::move(params)}, span_of_rows(tab, rows)});
    };
    std::vector<std::uint32_t> T;
    for (std::uint64_t t = 0; t < K.t_size(); ++t) T.push_back(tab.index_of(K.t_elem(t)));
    const std::uint32_t p1 = pi_idx(tab, 1), p2 = pi_idx(tab, 2), p3 = pi_idx(tab, 3);
    // (I) (f^2(a + b f), 1)
    for (const auto a : T)
        for (const auto b : T)
            add_form('1', 0, {a, b}, {{tab.mul(p2, tab.add(a, tab.mul(b, p1))), one}});
    // (II) (0, f^3); (f^3 b, f^2); (f^3 a, f)
    add_form('2', 0, {}, {{0, p3}});
    for (const auto b : T) add_form('2', 1, {b}, {{tab.mul(p3, b), p2}});
    for (const auto a : T) add_form('2', 2, {a}, {{tab.mul(p3, a), p1}});
    // (III) f^k I2
    for (int k = 0; k <= 4; ++k)
        add_form('3', k, {}, {{pi_idx(tab, k), 0}, {0, pi_idx(tab, k)}});
    // (IV) [[0,1],[f,0]]; [[f^{t-1} z, 1],[f^t, 0]], t = 2,3
    add_form('4', 1, {}, {{0, one}, {p1, 0}});
    for (int t = 2; t <= 3; ++t)
        for (const auto z : T)
            add_form('4', t, {z}, {{tab.mul(pi_idx(tab, t - 1), z), one}, {pi_idx(tab, t), 0}});
    // (V) [[f^2 z, f],[f^3, 0]]; [[0, f^{t-1}],[f^t, 0]], t = 2,3
    for (const auto z : T) add_form('5', 1, {z}, {{tab.mul(p2, z), p1}, {p3, 0}});
    for (int t = 2; t <= 3; ++t) add_form('5', t, {}, {{0, pi_idx(tab, t - 1)}, {pi_idx(tab, t), 0}});

    StandardFormTag found;
    int matches = 0;
    for (const auto& [tag, set] : forms)
        if (set == code.elems) {
            found = tag;
            ++matches;
        }
    if (matches != 1)
        throw std::logic_error("classify_standard_form: expected exactly one class, got " +
                               std::to_string(matches));
    return found;
}

PairSet sigma_to_ideal(const KTable& tab, const Length2Code& code) {
    const std::uint64_t ks = tab.size();
    for (const auto pe : code.elems) {
        const auto a = static_cast<std::uint32_t>(pe / ks), b = static_cast<std::uint32_t>(pe % ks);
        // v(a + vb) = v(a + 2b): the sigma image must be closed under v
        const std::uint32_t vb = tab.add(a, tab.mul(tab.two(), b));
        if (!std::binary_search(code.elems.begin(), code.elems.end(), vb))
            throw std::invalid_argument(
                "sigma_to_ideal: code does not satisfy the closure condition");
    }
    return code.elems;
}

}  // namespace nega
