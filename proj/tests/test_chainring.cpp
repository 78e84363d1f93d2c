#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "nega/chainring.hpp"
#include "nega/factorbase.hpp"

using namespace nega;

TEST_CASE("ring over f = x-1") {
    const ChainRing K(Z4Poly::from_string("3 1"));
    CHECK(K.modulus() == Z4Poly::from_string("1 0 1"));
    CHECK(K.g() == Z4Poly::from_string("0 1"));
    CHECK(K.omega() == Z4Poly::from_string("0 3"));
    // nilpotency index exactly 4: (x-1)^3 = 2+2x != 0, (x-1)^4 = 0
    CHECK(K.pi_pow(3) == Z4Poly::from_string("2 2"));
    CHECK(K.pi_pow(4).is_zero());
    // 2 = omega * f^2
    CHECK(K.mul(K.omega(), K.pi_pow(2)) == Z4Poly::constant(2));
}

TEST_CASE("construction rejects non-basic-irreducible f") {
    CHECK_THROWS_AS(ChainRing(Z4Poly::from_string("1 0 0 1")), std::invalid_argument);  // x^3+1
    CHECK_THROWS_AS(ChainRing(Z4Poly::from_string("1 2 1")), std::invalid_argument);
    CHECK_THROWS_AS(ChainRing(Z4Poly::from_string("1 1 2")), std::invalid_argument);  // not monic
}

TEST_CASE("ring over f2 at n=7 has residue field 2^3") {
    const ChainRing K(Z4Poly::from_string("3 1 2 1"));
    CHECK(K.m() == 3);
    CHECK(K.t_size() == 8);
    CHECK(K.modulus().degree() == 6);
    CHECK(K.mul(K.f(), K.f()) == K.mul(Z4Poly::constant(2), K.g()));
    CHECK(K.mul(K.g(), K.omega()) == Z4Poly::constant(1));
    CHECK(!K.pi_pow(3).is_zero());
    CHECK(K.pi_pow(4).is_zero());
}

TEST_CASE("f-adic expansion m=1 exhaustive") {
    const ChainRing K(Z4Poly::from_string("3 1"));
    const auto elems = K.elements();
    REQUIRE(elems.size() == 16);
    std::set<std::array<std::string, 4>> seen;
    for (const auto& e : elems) {
        const auto t = K.f_adic_expand(e);
        CHECK(K.f_adic_compose(t) == e);
        for (const auto& d : t) CHECK(d.degree() < 1);
        seen.insert({t[0].to_string(), t[1].to_string(), t[2].to_string(), t[3].to_string()});
    }
    CHECK(seen.size() == 16);  // bijection onto T^4

    CHECK(K.f_adic_expand(Z4Poly())[0].is_zero());
    CHECK(K.pi_degree(Z4Poly()) == 4);
    CHECK(K.pi_degree(Z4Poly::constant(1)) == 0);
    CHECK(K.pi_degree(Z4Poly::constant(2)) == 2);  // 2 = omega f^2
    CHECK(K.pi_degree(K.f()) == 1);
    const auto tf = K.f_adic_expand(K.f());
    CHECK(tf[0].is_zero());
    CHECK(tf[1] == Z4Poly::constant(1));
    CHECK(tf[2].is_zero());
    CHECK(tf[3].is_zero());

    // ideal chain sizes |<f^i>| = 2^{4-i}
    for (int i = 0; i <= 4; ++i) {
        std::set<std::string> ideal;
        const Z4Poly fi = K.pi_pow(i);
        for (const auto& e : elems) ideal.insert(K.mul(fi, e).to_string());
        CHECK(ideal.size() == (std::size_t(1) << (4 - i)));
    }
}

TEST_CASE("f-adic expansion m=3 random sampling") {
    const ChainRing K(Z4Poly::from_string("3 1 2 1"));
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dc(0, 3);
    for (int it = 0; it < 10000; ++it) {
        std::vector<std::uint8_t> c(6);
        for (auto& x : c) x = static_cast<std::uint8_t>(dc(rng));
        const Z4Poly e{std::move(c)};
        const auto t = K.f_adic_expand(e);
        CHECK(K.f_adic_compose(t) == e);
        for (const auto& d : t) {
            CHECK(d.degree() < 3);
            for (auto x : d.coeffs()) CHECK(x <= 1);
        }
    }
}

TEST_CASE("unit inversion") {
    const ChainRing K(Z4Poly::from_string("3 1 2 1"));
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> dc(0, 3);
    int inverted = 0;
    for (int it = 0; it < 2000; ++it) {
        std::vector<std::uint8_t> c(6);
        for (auto& x : c) x = static_cast<std::uint8_t>(dc(rng));
        const Z4Poly e{std::move(c)};
        if (!K.is_unit(e)) continue;
        CHECK(K.mul(e, K.invert_unit(e)) == Z4Poly::constant(1));
        ++inverted;
    }
    CHECK(inverted > 1000);
    CHECK_THROWS_AS(K.invert_unit(Z4Poly::constant(2)), std::invalid_argument);
}

TEST_CASE("pi_shift_down") {
    const ChainRing K(Z4Poly::from_string("3 1"));
    for (const auto& e : K.elements()) {
        const int d = K.pi_degree(e);
        for (int k = 0; k <= d && k <= 3; ++k) {
            const Z4Poly y = K.pi_shift_down(e, k);
            CHECK(K.mul(K.pi_pow(k), y) == K.reduce(e));
        }
    }
    CHECK_THROWS_AS(K.pi_shift_down(Z4Poly::constant(1), 1), std::invalid_argument);
}

TEST_CASE("conjugate_mu") {
    const auto ctx = factor_xn_minus_1(7);

    SUBCASE("identity on constants") {
        CHECK(conjugate_mu(ctx, 1, Z4Poly::constant(1)) == Z4Poly::constant(1));
        CHECK(conjugate_mu(ctx, 0, Z4Poly::constant(3)) == Z4Poly::constant(3));
    }

    SUBCASE("a(x^{-1}) for a in T_2") {
        // a0 + 2a2 + 2a1 x + 3a2 x^2 + 3a1 x^3 + 3a2 x^4 + 3a1 x^5 in K_3;
        // sanity anchors: x * x^{-1} = 1 and the mod-2 image
        // a0 + a2 x^2 + a1 x^3 + a2 x^4 + a1 x^5.
        const ChainRing& K3 = ctx.rings[2];
        for (int bits = 0; bits < 8; ++bits) {
            const int a0 = bits & 1, a1 = (bits >> 1) & 1, a2 = (bits >> 2) & 1;
            const Z4Poly a{{static_cast<std::uint8_t>(a0), static_cast<std::uint8_t>(a1),
                            static_cast<std::uint8_t>(a2)}};
            const Z4Poly got = conjugate_mu(ctx, 1, a);
            const Z4Poly expect{{static_cast<std::uint8_t>((a0 + 2 * a2) % 4),
                                 static_cast<std::uint8_t>(2 * a1), static_cast<std::uint8_t>(3 * a2),
                                 static_cast<std::uint8_t>(3 * a1), static_cast<std::uint8_t>(3 * a2),
                                 static_cast<std::uint8_t>(3 * a1)}};
            CHECK(got == expect);
            const F2Poly mod2{{static_cast<std::uint8_t>(a0), 0, static_cast<std::uint8_t>(a2),
                               static_cast<std::uint8_t>(a1), static_cast<std::uint8_t>(a2),
                               static_cast<std::uint8_t>(a1)}};
            CHECK(project_mod2(got) == mod2);
        }
        const Z4Poly xinv = conjugate_mu(ctx, 1, Z4Poly::x_pow(1));
        CHECK(K3.mul(xinv, Z4Poly::x_pow(1)) == Z4Poly::constant(1));
    }

    SUBCASE("mu_i(f_i) = -delta_i x^{2n-m_i} f_{mu(i)}") {
        for (int i = 0; i < ctx.r(); ++i) {
            const int j = ctx.mu[i];
            const Z4Poly lhs = conjugate_mu(ctx, i, ctx.factors[i]);
            Z4Poly rhs = ctx.rings[j].mul(Z4Poly::x_pow(14 - ctx.m(i)), ctx.factors[j]);
            if (ctx.delta[i] == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }

    SUBCASE("ring homomorphism and involution, random elements") {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> dc(0, 3);
        for (int it = 0; it < 300; ++it) {
            const int i = it % ctx.r();
            const int j = ctx.mu[i];
            const auto rand_elem = [&](int mm) {
                std::vector<std::uint8_t> c(2 * mm);
                for (auto& x : c) x = static_cast<std::uint8_t>(dc(rng));
                return Z4Poly(std::move(c));
            };
            const Z4Poly a = rand_elem(ctx.m(i)), b = rand_elem(ctx.m(i));
            CHECK(conjugate_mu(ctx, i, ctx.rings[i].mul(a, b)) ==
                  ctx.rings[j].mul(conjugate_mu(ctx, i, a), conjugate_mu(ctx, i, b)));
            CHECK(conjugate_mu(ctx, i, ctx.rings[i].add(a, b)) ==
                  ctx.rings[j].add(conjugate_mu(ctx, i, a), conjugate_mu(ctx, i, b)));
            CHECK(conjugate_mu(ctx, j, conjugate_mu(ctx, i, a)) == ctx.rings[i].reduce(a));
        }
    }
}
