#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "nega/gray.hpp"
#include "nega/minweight.hpp"
#include "support.hpp"

using namespace nega;
using namespace nega::testsupport;

TEST_CASE("rho and symbol weights") {
    CHECK(gray_rho(0, 0) == std::array<std::uint8_t, 2>{0, 0});
    CHECK(gray_rho(0, 1) == std::array<std::uint8_t, 2>{1, 1});  // v -> (1,1)
    CHECK(gray_rho(2, 3) == std::array<std::uint8_t, 2>{1, 3});  // 2+3v -> (1,3)
    CHECK(lee_weight_r(0, 1) == 2);                              // w_L(v) = 2
    CHECK(lee_weight_r(2, 0) == 2);
    // exhaustive: w_L(e) equals the Z4 Lee weight of rho(e), all 16 elements
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const auto [s, t] = gray_rho(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
            CHECK(lee_weight_r(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) ==
                  lee_weight_z4(s) + lee_weight_z4(t));
        }
    // Euclidean symbol weights 0,1,4,1
    CHECK(euclidean_weight_z4(0) == 0);
    CHECK(euclidean_weight_z4(1) == 1);
    CHECK(euclidean_weight_z4(2) == 4);
    CHECK(euclidean_weight_z4(3) == 1);
}

TEST_CASE("theta") {
    RWord zero;
    zero.sym.assign(5, {0, 0});
    CHECK(theta(zero) == std::vector<std::uint8_t>(10, 0));
    RWord w;
    w.sym = {{0, 1}};
    CHECK(theta(w) == std::vector<std::uint8_t>{1, 1});
    // additivity on random pairs (rho is Z4-linear)
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> d(0, 3);
    for (int it = 0; it < 10000; ++it) {
        RWord x, y, s;
        x.sym.resize(6);
        y.sym.resize(6);
        s.sym.resize(6);
        for (int k = 0; k < 6; ++k) {
            x.sym[k] = {static_cast<std::uint8_t>(d(rng)), static_cast<std::uint8_t>(d(rng))};
            y.sym[k] = {static_cast<std::uint8_t>(d(rng)), static_cast<std::uint8_t>(d(rng))};
            s.sym[k] = r_add(x.sym[k], y.sym[k]);
        }
        const auto tx = theta(x), ty = theta(y), ts = theta(s);
        for (std::size_t k = 0; k < ts.size(); ++k)
            CHECK(ts[k] == ((tx[k] + ty[k]) & 3));
    }
}

TEST_CASE("binary gray map") {
    CHECK(z4_to_binary_gray({0}) == std::vector<std::uint8_t>{0, 0});
    CHECK(z4_to_binary_gray({1}) == std::vector<std::uint8_t>{0, 1});
    CHECK(z4_to_binary_gray({2}) == std::vector<std::uint8_t>{1, 1});
    CHECK(z4_to_binary_gray({3}) == std::vector<std::uint8_t>{1, 0});
    for (std::uint8_t c = 0; c < 4; ++c) {
        const auto img = z4_to_binary_gray({c});
        CHECK(img[0] + img[1] == lee_weight_z4(c));
    }
}

TEST_CASE("desk-scale Gray properties at n = 1") {
    const auto ctx = factor_xn_minus_1(1);
    const KTable tab(ctx.rings[0]);
    for (const auto& spec : enumerate_ideals(ctx.rings[0])) {
        const auto code = assemble(ctx, {spec});
        const auto cw = materialize_n1(ctx, tab, code);

        // theta(C) as a word set, with Lee spectra comparison
        std::set<std::vector<std::uint8_t>> tc;
        std::multiset<int> spec_r, spec_z4;
        for (const auto& w : cw) {
            RWord rw;
            rw.sym = {w[0], w[1]};
            const auto img = theta(rw);
            tc.insert(img);
            int wl = 0;
            for (const auto& s : w) wl += lee_weight_r(s[0], s[1]);
            spec_r.insert(wl);
            int wz = 0;
            for (const auto c : img) wz += lee_weight_z4(c);
            spec_z4.insert(wz);
        }
        CHECK(tc.size() == cw.size());  // |theta(C)| = |C|
        CHECK(spec_r == spec_z4);       // Lee spectra coincide

        // theta(C) closed under Z4-linear combinations
        std::vector<std::vector<std::uint8_t>> tv(tc.begin(), tc.end());
        std::mt19937_64 rng(101);
        std::uniform_int_distribution<std::size_t> pick(0, tv.size() - 1);
        std::uniform_int_distribution<int> scal(0, 3);
        for (int it = 0; it < 100; ++it) {
            const auto& x = tv[pick(rng)];
            const auto& y = tv[pick(rng)];
            const int s = scal(rng);
            std::vector<std::uint8_t> comb(4);
            for (int k = 0; k < 4; ++k)
                comb[k] = static_cast<std::uint8_t>((x[k] + s * y[k]) & 3);
            CHECK(tc.count(comb) == 1);
        }

        // theta(dual(C)) equals the exhaustive Z4-dual of theta(C)
        const auto dw = materialize_n1(ctx, tab, dual(ctx, code));
        std::set<std::vector<std::uint8_t>> td;
        for (const auto& w : dw) {
            RWord rw;
            rw.sym = {w[0], w[1]};
            td.insert(theta(rw));
        }
        std::set<std::vector<std::uint8_t>> z4dual;
        for (int v = 0; v < 256; ++v) {
            std::vector<std::uint8_t> w(4);
            for (int k = 0; k < 4; ++k) w[k] = static_cast<std::uint8_t>((v >> (2 * k)) & 3);
            bool ok = true;
            for (const auto& cwd : tc) {
                int ip = 0;
                for (int k = 0; k < 4; ++k) ip += w[k] * cwd[k];
                if (ip % 4) {
                    ok = false;
                    break;
                }
            }
            if (ok) z4dual.insert(w);
        }
        CHECK(td == z4dual);
    }
}

TEST_CASE("gray_image preserves the type") {
    const auto ctx = factor_xn_minus_1(7);
    const IdealSpec c1 = make_ideal_spec(Family::F15, {}, F2Poly(), 1);
    const IdealSpec c2 = make_ideal_spec(Family::F3, {}, F2Poly::from_string("0 0 1"), 3);
    const auto code = assemble(ctx, {c1, c2, dual_component(ctx, 1, c2)});
    const auto flat = to_z4_code(ctx, code);
    const auto gray = gray_image(flat);
    CHECK(gray.k1() == flat.k1());
    CHECK(gray.k2() == flat.k2());
    CHECK(gray.length == flat.length);
}

TEST_CASE("min_weights kernels agree with the naive oracle on random codes") {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<int> dlen(6, 40), dk1(0, 4), dk2(0, 5), dc(0, 3);
    for (int it = 0; it < 40; ++it) {
        const int len = dlen(rng);
        std::vector<std::vector<std::uint8_t>> rows;
        const int k1 = dk1(rng), k2 = dk2(rng);
        for (int i = 0; i < k1; ++i) {
            std::vector<std::uint8_t> r(len);
            for (auto& x : r) x = static_cast<std::uint8_t>(dc(rng));
            rows.push_back(std::move(r));
        }
        for (int i = 0; i < k2; ++i) {
            std::vector<std::uint8_t> r(len);
            for (auto& x : r) x = static_cast<std::uint8_t>(2 * (dc(rng) & 1));
            rows.push_back(std::move(r));
        }
        const auto code = z4_standard_form(std::move(rows), len);
        if (code.k1() + code.k2() == 0) continue;
        const auto naive = min_weights_naive(code);
        const auto scalar = min_weights(code, 1, WeightKernel::Scalar);
        CHECK(naive.min_lee == scalar.min_lee);
        CHECK(naive.min_euclidean == scalar.min_euclidean);
        CHECK(naive.codewords_scanned == scalar.codewords_scanned);
        const auto threaded = min_weights(code, 2, WeightKernel::Scalar);
        CHECK(naive.min_lee == threaded.min_lee);
        CHECK(naive.min_euclidean == threaded.min_euclidean);
        if (avx2_kernel_available() && len <= 64) {
            const auto avx = min_weights(code, 2, WeightKernel::Avx2);
            CHECK(naive.min_lee == avx.min_lee);
            CHECK(naive.min_euclidean == avx.min_euclidean);
            CHECK(naive.codewords_scanned == avx.codewords_scanned);
        }
    }
}

TEST_CASE("min_weights handles multi-word lengths") {
    std::mt19937_64 rng(1212);
    std::uniform_int_distribution<int> dc(0, 3);
    for (int len : {64, 65, 70, 128, 130}) {
        std::vector<std::vector<std::uint8_t>> rows;
        for (int i = 0; i < 3; ++i) {
            std::vector<std::uint8_t> r(len);
            for (auto& x : r) x = static_cast<std::uint8_t>(dc(rng));
            rows.push_back(std::move(r));
        }
        const auto code = z4_standard_form(std::move(rows), len);
        const auto naive = min_weights_naive(code);
        const auto scalar = min_weights(code, 2, WeightKernel::Scalar);
        CHECK(naive.min_lee == scalar.min_lee);
        CHECK(naive.min_euclidean == scalar.min_euclidean);
    }
}

TEST_CASE("min_weights single-generator examples") {
    // one order-2 generator of value 2 in every position, length 28
    std::vector<std::vector<std::uint8_t>> rows = {std::vector<std::uint8_t>(28, 2)};
    const auto code = z4_standard_form(std::move(rows), 28);
    const auto w = min_weights(code, 1);
    CHECK(w.min_lee == 56);
    CHECK(w.min_euclidean == 112);
    CHECK(w.codewords_scanned == 2);

    // one order-2 generator with exactly two 2s: Euclidean weight 8
    std::vector<std::vector<std::uint8_t>> rows2 = {{2, 0, 2, 0, 0, 0}};
    const auto code2 = z4_standard_form(std::move(rows2), 6);
    const auto w2 = min_weights(code2, 1);
    CHECK(w2.min_lee == 4);
    CHECK(w2.min_euclidean == 8);

    // zero code
    const auto code3 = z4_standard_form({}, 6);
    const auto w3 = min_weights(code3, 1);
    CHECK(w3.min_lee == 0);
    CHECK(w3.codewords_scanned == 1);
}

TEST_CASE("min_weights rejects oversized inputs") {
    std::vector<std::vector<std::uint8_t>> rows;
    for (int i = 0; i < 16; ++i) {
        std::vector<std::uint8_t> r(40, 0);
        r[2 * i] = 1;
        rows.push_back(std::move(r));
    }
    const auto code = z4_standard_form(std::move(rows), 40);  // 4^16 = 2^32 > 2^30
    CHECK_THROWS_AS(min_weights(code, 1), std::invalid_argument);
}

TEST_CASE("flagship weight profile, one code per family") {
    const auto ctx = factor_xn_minus_1(7);
    const IdealSpec c2 = make_ideal_spec(Family::F3, {}, F2Poly::from_string("0 0 1"), 3);
    const IdealSpec c3 = dual_component(ctx, 1, c2);
    SUBCASE("C1 = <v(x-1), 2(x-1)>: (28, 2^28, d_L=8, d_E=12), type 4^7 2^14") {
        const auto code =
            assemble(ctx, {make_ideal_spec(Family::F15, {}, F2Poly(), 1), c2, c3});
        const auto gray = gray_image(to_z4_code(ctx, code));
        CHECK(gray.k1() == 7);
        CHECK(gray.k2() == 14);
        const auto w = min_weights(gray);
        CHECK(w.min_lee == 8);
        CHECK(w.min_euclidean == 12);
        CHECK(w.codewords_scanned == (std::uint64_t(1) << 28));
    }
    SUBCASE("C1 = <2>: (28, 2^28, d_L=6, d_E=12), type 4^6 2^16") {
        const auto code =
            assemble(ctx, {make_ideal_spec(Family::F7, {}, {}, 1), c2, c3});
        const auto gray = gray_image(to_z4_code(ctx, code));
        CHECK(gray.k1() == 6);
        CHECK(gray.k2() == 16);
        const auto w = min_weights(gray);
        CHECK(w.min_lee == 6);
        CHECK(w.min_euclidean == 12);
    }
}

TEST_CASE("is_quasi_twisted") {
    const auto ctx = factor_xn_minus_1(7);
    SUBCASE("zero code and full space") {
        std::vector<IdealSpec> all9(3, IdealSpec{Family::F9, {}, {}});
        CHECK(is_quasi_twisted(gray_image(to_z4_code(ctx, assemble(ctx, all9)))));
        std::vector<IdealSpec> all5(3, IdealSpec{Family::F5, {}, {}});
        CHECK(is_quasi_twisted(gray_image(to_z4_code(ctx, assemble(ctx, all5)))));
    }
    SUBCASE("a non-quasi-twisted control") {
        // single unit row supported on one symbol: the shifted row leaves the span
        std::vector<std::vector<std::uint8_t>> rows = {{1, 0, 0, 0, 0, 0}};
        const auto code = z4_standard_form(std::move(rows), 6);
        CHECK(!is_quasi_twisted(code));
    }
    SUBCASE("sample of self-dual Gray images at n = 7") {
        CodeStream s(ctx, CodeStream::Mode::SelfDual);
        int checked = 0;
        while (auto c = s.next()) {
            if (checked++ % 23 != 0) continue;  // sample; the acceptance suite runs all 339
            CHECK(is_quasi_twisted(gray_image(to_z4_code(ctx, *c))));
        }
    }
}
