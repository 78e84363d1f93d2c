#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nega/z4poly.hpp"

using namespace nega;

namespace {

Z4Poly random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg), dc(0, 3);
    const int d = dd(rng);
    std::vector<std::uint8_t> c(d + 1);
    for (auto& x : c) x = static_cast<std::uint8_t>(dc(rng));
    return Z4Poly(std::move(c));
}

}  // namespace

TEST_CASE("textual format round trip") {
    const Z4Poly p = Z4Poly::from_string("3 1 2 1");
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "3 1 2 1");
    CHECK(Z4Poly::from_string("").is_zero());
    CHECK(Z4Poly::from_string("0").is_zero());
    CHECK(Z4Poly().to_string() == "0");
    CHECK(Z4Poly::from_string("7 -1").to_string() == "3 3");
}

TEST_CASE("mul examples") {
    // (x-1)(x^2+x+1) = x^3-1
    CHECK(Z4Poly::from_string("3 1") * Z4Poly::from_string("1 1 1") ==
          Z4Poly::from_string("3 0 0 1"));
    // x^7 * x^7 mod x^14+1 = -1
    CHECK(mul_negacyclic(Z4Poly::x_pow(7), Z4Poly::x_pow(7), 14) == Z4Poly::constant(3));
    // (x-1)^2 mod x^2+1 = 2x
    CHECK(mul_mod(Z4Poly::from_string("3 1"), Z4Poly::from_string("3 1"),
                  Z4Poly::from_string("1 0 1")) == Z4Poly::from_string("0 2"));
}

TEST_CASE("divmod requires monic divisor") {
    CHECK_THROWS_AS(divmod(Z4Poly::from_string("1 1"), Z4Poly::from_string("1 2")),
                    std::invalid_argument);
    const auto [q, r] = divmod(Z4Poly::from_string("3 0 0 1"), Z4Poly::from_string("3 1"));
    CHECK(q == Z4Poly::from_string("1 1 1"));
    CHECK(r.is_zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 10000; ++it) {
        const Z4Poly a = random_poly(rng, 30), b = random_poly(rng, 30), c = random_poly(rng, 30);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - b == -(b - a));
    }
}

TEST_CASE("project_mod2 is a ring homomorphism") {
    CHECK(project_mod2(Z4Poly::from_string("3 1 2 1")) == F2Poly::from_string("1 1 0 1"));
    CHECK(project_mod2(Z4Poly::from_string("2 2")).is_zero());
    CHECK(project_mod2(Z4Poly::from_string("3 1")) == F2Poly::from_string("1 1"));
    std::mt19937_64 rng(777);
    for (int it = 0; it < 2000; ++it) {
        const Z4Poly p = random_poly(rng, 25), q = random_poly(rng, 25);
        CHECK(project_mod2(p * q) == project_mod2(p) * project_mod2(q));
        CHECK(project_mod2(p + q) == project_mod2(p) + project_mod2(q));
    }
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(Z4Poly::from_string("3 1 2 1")) == Z4Poly::from_string("1 2 1 3"));
    CHECK(reciprocal(Z4Poly::from_string("3 1")) == Z4Poly::from_string("1 3"));
    CHECK_THROWS_AS(reciprocal(Z4Poly()), std::invalid_argument);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 500; ++it) {
        Z4Poly p = random_poly(rng, 12);
        if (p.is_zero() || p.coeff(0) == 0) continue;
        CHECK(reciprocal(reciprocal(p)) == p);
    }
}

TEST_CASE("hensel lift factor") {
    SUBCASE("x^3-1 over Z4") {
        const auto [f, g] = hensel_lift_factor(F2Poly::from_string("1 1"),
                                               F2Poly::from_string("1 1 1"),
                                               Z4Poly::from_string("3 0 0 1"));
        CHECK(f == Z4Poly::from_string("3 1"));
        CHECK(g == Z4Poly::from_string("1 1 1"));
    }
    SUBCASE("x^7-1 over Z4") {
        std::vector<std::uint8_t> t(8, 0);
        t[0] = 3;
        t[7] = 1;
        const Z4Poly target{std::move(t)};
        const F2Poly gbar = F2Poly::from_string("1 1 0 1") * F2Poly::from_string("1 0 1 1");
        const auto [f, g] = hensel_lift_factor(F2Poly::from_string("1 1"), gbar, target);
        CHECK(f == Z4Poly::from_string("3 1"));
        CHECK(f * g == target);
        CHECK(project_mod2(g) == gbar);
    }
    SUBCASE("identity cofactor") {
        const Z4Poly target = Z4Poly::from_string("3 1 2 1");
        const auto [f, g] =
            hensel_lift_factor(project_mod2(target), F2Poly::one(), target);
        CHECK(f == target);
        CHECK(g == Z4Poly::constant(1));
    }
    SUBCASE("rejects non-coprime inputs") {
        CHECK_THROWS_AS(hensel_lift_factor(F2Poly::from_string("1 1"), F2Poly::from_string("1 1"),
                                           Z4Poly::from_string("1 2 1")),
                        std::invalid_argument);
    }
}

TEST_CASE("lift bezout") {
    SUBCASE("n=3 pair") {
        const Z4Poly F = Z4Poly::from_string("1 1 1"), f = Z4Poly::from_string("3 1");
        const F2Bezout bz = gcdext(project_mod2(F), project_mod2(f));
        REQUIRE(bz.g.is_one());
        const auto [a, b] = lift_bezout(bz.u, bz.v, F, f);
        CHECK(a * F + b * f == Z4Poly::constant(1));
    }
    SUBCASE("trivial F=1") {
        const auto [a, b] =
            lift_bezout(F2Poly::one(), F2Poly(), Z4Poly::constant(1), Z4Poly::from_string("3 1"));
        CHECK(a == Z4Poly::constant(1));
        CHECK(b.is_zero());
    }
    SUBCASE("rejects non-bezout inputs") {
        CHECK_THROWS_AS(lift_bezout(F2Poly::one(), F2Poly::one(), Z4Poly::from_string("0 1"),
                                    Z4Poly::from_string("0 1")),
                        std::invalid_argument);
    }
}

TEST_CASE("f2 factorization of x^n+1") {
    for (int n : {1, 3, 5, 7, 9, 15, 21, 31, 63, 127}) {
        std::vector<std::uint8_t> t(n + 1, 0);
        t[0] = 1;
        t[n] = 1;
        const F2Poly target{std::move(t)};
        const auto factors = factor_squarefree_f2(target);
        F2Poly prod = F2Poly::one();
        for (const auto& f : factors) {
            CHECK(is_irreducible(f));
            prod = prod * f;
        }
        CHECK(prod == target);
    }
}
