#include "nega/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace nega {

namespace {

const char* kNames[] = {"",   "F1",  "F2",  "F3",  "F4",  "F5",  "F6",  "F7",
                        "F8", "F9",  "F10", "F11", "F12", "F13", "F14", "F15"};

}  // namespace

const char* family_name(Family f) { return kNames[static_cast<int>(f)]; }

Family family_from_name(std::string_view s) {
    for (int i = 1; i <= 15; ++i)
        if (s == kNames[i]) return static_cast<Family>(i);
    throw std::invalid_argument("unknown ideal family: " + std::string(s));
}

bool family_needs_a(Family f) { return f == Family::F1 || f == Family::F4 || f == Family::F12; }

bool family_needs_b(Family f) {
    return f == Family::F1 || f == Family::F3 || f == Family::F11 || f == Family::F15;
}

IdealSpec make_ideal_spec(Family f, std::optional<F2Poly> a, std::optional<F2Poly> b, int m) {
    if (family_needs_a(f) != a.has_value())
        throw std::invalid_argument(std::string("ideal spec: parameter a ") +
                                    (a ? "unexpected for " : "missing for ") + family_name(f));
    if (family_needs_b(f) != b.has_value())
        throw std::invalid_argument(std::string("ideal spec: parameter b ") +
                                    (b ? "unexpected for " : "missing for ") + family_name(f));
    if (a && a->degree() >= m) throw std::invalid_argument("ideal spec: a outside T");
    if (b && b->degree() >= m) throw std::invalid_argument("ideal spec: b outside T");
    return {f, std::move(a), std::move(b)};
}

cpp_int ideal_cardinality(const IdealSpec& spec, int m) {
    const auto p2 = [&](int e) -> cpp_int { return cpp_int(1) << (e * m); };
    switch (spec.family) {
        case Family::F1: return p2(4);
        case Family::F2: return p2(1);
        case Family::F3: return p2(2);
        case Family::F4: return p2(3);
        case Family::F5: return p2(8);
        case Family::F6: return p2(6);
        case Family::F7: return p2(4);
        case Family::F8: return p2(2);
        case Family::F9: return 1;
        case Family::F10: return p2(7);
        case Family::F11: return p2(6);
        case Family::F12: return p2(5);
        case Family::F13: return p2(5);
        case Family::F14: return p2(3);
        case Family::F15: return p2(4);
    }
    throw std::logic_error("ideal_cardinality: bad family");
}

IdealSpec annihilator(const IdealSpec& spec) {
    const auto onep = [](const F2Poly& p) { return p + F2Poly::one(); };
    switch (spec.family) {
        case Family::F1: return {Family::F1, onep(*spec.a), spec.b};
        case Family::F2: return {Family::F10, {}, {}};
        case Family::F3: return {Family::F11, {}, spec.b};
        case Family::F4: return {Family::F12, onep(*spec.a), {}};
        case Family::F5: return {Family::F9, {}, {}};
        case Family::F6: return {Family::F8, {}, {}};
        case Family::F7: return {Family::F7, {}, {}};
        case Family::F8: return {Family::F6, {}, {}};
        case Family::F9: return {Family::F5, {}, {}};
        case Family::F10: return {Family::F2, {}, {}};
        case Family::F11: return {Family::F3, {}, spec.b};
        case Family::F12: return {Family::F4, onep(*spec.a), {}};
        case Family::F13: return {Family::F14, {}, {}};
        case Family::F14: return {Family::F13, {}, {}};
        case Family::F15: return {Family::F15, {}, spec.b};
    }
    throw std::logic_error("annihilator: bad family");
}

RvElem rv_add(const ChainRing& K, const RvElem& x, const RvElem& y) {
    return {K.add(x.alpha, y.alpha), K.add(x.beta, y.beta)};
}

RvElem rv_sub(const ChainRing& K, const RvElem& x, const RvElem& y) {
    return {K.sub(x.alpha, y.alpha), K.sub(x.beta, y.beta)};
}

RvElem rv_mul(const ChainRing& K, const RvElem& x, const RvElem& y) {
    const Z4Poly al = K.mul(x.alpha, y.alpha);
    Z4Poly be = K.add(K.mul(x.alpha, y.beta), K.mul(x.beta, y.alpha));
    be = K.add(be, K.mul(Z4Poly::constant(2), K.mul(x.beta, y.beta)));
    return {al, be};
}

std::vector<RvElem> ideal_generators(const IdealSpec& spec, const ChainRing& K) {
    const Z4Poly f = K.f();
    const Z4Poly two = Z4Poly::constant(2), one = Z4Poly::constant(1);
    const Z4Poly a = spec.a ? lift_to_z4(*spec.a) : Z4Poly();
    const Z4Poly b = spec.b ? lift_to_z4(*spec.b) : Z4Poly();
    switch (spec.family) {
        case Family::F1: return {{K.mul(two, K.add(a, K.mul(b, f))), one}};
        case Family::F2: return {{Z4Poly(), K.mul(two, f)}};
        case Family::F3: return {{K.mul(two, K.mul(f, b)), two}};
        case Family::F4: return {{K.mul(two, K.mul(a, f)), f}};
        case Family::F5: return {{one, Z4Poly()}};
        case Family::F6: return {{f, Z4Poly()}};
        case Family::F7: return {{two, Z4Poly()}};
        case Family::F8: return {{K.mul(two, f), Z4Poly()}};
        case Family::F9: return {};
        case Family::F10: return {{f, Z4Poly()}, {Z4Poly(), one}};
        case Family::F11: return {{K.mul(f, b), one}, {two, Z4Poly()}};
        case Family::F12: return {{K.mul(two, a), one}, {K.mul(two, f), Z4Poly()}};
        case Family::F13: return {{two, Z4Poly()}, {Z4Poly(), f}};
        case Family::F14: return {{K.mul(two, f), Z4Poly()}, {Z4Poly(), two}};
        case Family::F15: return {{K.mul(two, b), f}, {K.mul(two, f), Z4Poly()}};
    }
    throw std::logic_error("ideal_generators: bad family");
}

std::vector<IdealSpec> enumerate_ideals(const ChainRing& K) {
    const int m = K.m();
    std::vector<F2Poly> T;
    for (std::uint64_t t = 0; t < K.t_size(); ++t) T.push_back(project_mod2(K.t_elem(t)));
    std::vector<IdealSpec> out;
    for (const auto& a : T)
        for (const auto& b : T) out.push_back(make_ideal_spec(Family::F1, a, b, m));
    out.push_back(make_ideal_spec(Family::F2, {}, {}, m));
    for (const auto& b : T) out.push_back(make_ideal_spec(Family::F3, {}, b, m));
    for (const auto& a : T) out.push_back(make_ideal_spec(Family::F4, a, {}, m));
    for (Family f : {Family::F5, Family::F6, Family::F7, Family::F8, Family::F9, Family::F10})
        out.push_back(make_ideal_spec(f, {}, {}, m));
    for (const auto& b : T) out.push_back(make_ideal_spec(Family::F11, {}, b, m));
    for (const auto& a : T) out.push_back(make_ideal_spec(Family::F12, a, {}, m));
    out.push_back(make_ideal_spec(Family::F13, {}, {}, m));
    out.push_back(make_ideal_spec(Family::F14, {}, {}, m));
    for (const auto& b : T) out.push_back(make_ideal_spec(Family::F15, {}, b, m));
    return out;
}

std::vector<KPair> sigma_preimage_rows(const IdealSpec& spec, const ChainRing& K) {
    std::vector<KPair> rows;
    for (const auto& g : ideal_generators(spec, K)) {
        rows.push_back({g.alpha, g.beta});
        // v * (alpha + v beta) = v(alpha + 2 beta)
        rows.push_back({Z4Poly(), K.add(g.alpha, K.mul(Z4Poly::constant(2), g.beta))});
    }
    return rows;
}

bool ideal_contains(const IdealSpec& spec, const ChainRing& K, const RvElem& e) {
    const auto sf = k_standard_form(K, sigma_preimage_rows(spec, K));
    return k_span_contains(K, sf, {e.alpha, e.beta});
}

PairSet materialize_ideal(const IdealSpec& spec, const KTable& tab) {
    const ChainRing& K = tab.ring();
    const std::uint64_t ks = tab.size();
    std::vector<std::uint32_t> gens;
    for (const auto& g : ideal_generators(spec, K)) {
        const std::uint32_t ga = tab.index_of(g.alpha), gb = tab.index_of(g.beta);
        // all (c + dv)(ga + v gb) for ring multipliers; K-multiples of the two
        // sigma-preimage rows span the same set additively
        const std::uint32_t vb = tab.add(ga, tab.mul(tab.two(), gb));
        for (std::uint32_t c = 0; c < tab.size(); ++c) {
            gens.push_back(static_cast<std::uint32_t>(std::uint64_t(tab.mul(c, ga)) * ks + tab.mul(c, gb)));
            gens.push_back(static_cast<std::uint32_t>(std::uint64_t(0) * ks + tab.mul(c, vb)));
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // additive closure, shared with length-2 span logic
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

std::string spec_to_string(const IdealSpec& spec) {
    std::string s = family_name(spec.family);
    if (spec.a) s += " a=[" + spec.a->to_string() + "]";
    if (spec.b) s += " b=[" + spec.b->to_string() + "]";
    return s;
}

}  // namespace nega
