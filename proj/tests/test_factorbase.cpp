#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nega/factorbase.hpp"

using namespace nega;

TEST_CASE("n = 7 factorization matches the reference values") {
    const auto ctx = factor_xn_minus_1(7);
    REQUIRE(ctx.r() == 3);
    CHECK(ctx.factors[0].to_string() == "3 1");
    CHECK(ctx.factors[1].to_string() == "3 1 2 1");
    CHECK(ctx.factors[2].to_string() == "3 2 3 1");
    CHECK(ctx.lambda == 1);
    CHECK(ctx.pairs == 1);
    CHECK(ctx.mu == std::vector<int>{0, 2, 1});
    CHECK(ctx.delta == std::vector<int>{-1, -1, -1});
}

TEST_CASE("n = 7 idempotents match the reference values") {
    const auto ctx = factor_xn_minus_1(7);
    CHECK(ctx.idempotents[0].to_string() == "3 0 1 0 3 0 1 0 3 0 1 0 3");
    CHECK(ctx.idempotents[1].to_string() == "1 0 1 0 3 0 2 0 3 0 2 0 2");
    CHECK(ctx.idempotents[2].to_string() == "1 0 2 0 2 0 1 0 2 0 1 0 3");
}

TEST_CASE("small n") {
    SUBCASE("n = 1") {
        const auto ctx = factor_xn_minus_1(1);
        CHECK(ctx.r() == 1);
        CHECK(ctx.factors[0].to_string() == "3 1");
        CHECK(ctx.lambda == 1);
        CHECK(ctx.pairs == 0);
        CHECK(ctx.delta[0] == -1);
        CHECK(ctx.idempotents[0] == Z4Poly::constant(1));
    }
    SUBCASE("n = 3") {
        const auto ctx = factor_xn_minus_1(3);
        REQUIRE(ctx.r() == 2);
        CHECK(ctx.factors[0].to_string() == "3 1");
        CHECK(ctx.factors[1].to_string() == "1 1 1");
        CHECK(ctx.factors[0] * ctx.factors[1] == Z4Poly::from_string("3 0 0 1"));
        CHECK(ctx.lambda == 2);
        CHECK(ctx.pairs == 0);
        CHECK(reciprocal(ctx.factors[1]) == ctx.factors[1]);
        CHECK(ctx.delta == std::vector<int>{-1, 1});
    }
    SUBCASE("n = 15: two self-reciprocal factors plus one swapped pair") {
        const auto ctx = factor_xn_minus_1(15);
        CHECK(ctx.r() == 5);
        CHECK(ctx.lambda == 3);
        CHECK(ctx.pairs == 1);
    }
}

TEST_CASE("rejects invalid n") {
    CHECK_THROWS_AS(factor_xn_minus_1(0), std::invalid_argument);
    CHECK_THROWS_AS(factor_xn_minus_1(-3), std::invalid_argument);
    CHECK_THROWS_AS(factor_xn_minus_1(4), std::invalid_argument);
}

TEST_CASE("context invariants for several n") {
    for (int n : {1, 3, 5, 7, 9, 15, 21, 31}) {
        const auto ctx = factor_xn_minus_1(n);
        const std::size_t N = 2 * static_cast<std::size_t>(n);

        // product of factors is x^n - 1
        Z4Poly prod = Z4Poly::constant(1);
        int degsum = 0;
        for (const auto& f : ctx.factors) {
            prod = prod * f;
            degsum += f.degree();
            CHECK(f.is_monic());
            CHECK(is_irreducible(project_mod2(f)));
        }
        std::vector<std::uint8_t> t(n + 1, 0);
        t[0] = 3;
        t[n] = 1;
        CHECK(prod == Z4Poly(std::move(t)));
        CHECK(degsum == n);

        // mu is an involution consistent with reciprocals and the layout
        CHECK(ctx.lambda + 2 * ctx.pairs == ctx.r());
        for (int i = 0; i < ctx.r(); ++i) {
            CHECK(ctx.mu[ctx.mu[i]] == i);
            Z4Poly rec = reciprocal(ctx.factors[i]);
            if (ctx.delta[i] == -1) rec = -rec;
            CHECK(rec == ctx.factors[ctx.mu[i]]);
        }

        // idempotent identities in A = Z4[x]/<x^{2n}+1>
        Z4Poly sum;
        for (const auto& e : ctx.idempotents) sum = sum + e;
        CHECK(sum == Z4Poly::constant(1));
        for (int i = 0; i < ctx.r(); ++i) {
            CHECK(mul_negacyclic(ctx.idempotents[i], ctx.idempotents[i], N) == ctx.idempotents[i]);
            for (int j = i + 1; j < ctx.r(); ++j)
                CHECK(mul_negacyclic(ctx.idempotents[i], ctx.idempotents[j], N).is_zero());
        }
    }
}

TEST_CASE("mu permutes idempotents: mu(eps_i) = eps_{mu(i)}") {
    for (int n : {1, 3, 7}) {
        const auto ctx = factor_xn_minus_1(n);
        for (int i = 0; i < ctx.r(); ++i)
            CHECK(ambient_mu(ctx.idempotents[i], n) == ctx.idempotents[ctx.mu[i]]);
    }
}

TEST_CASE("Mersenne factor counts: r = 1 + (2^p - 2)/p") {
    CHECK(factor_xn_minus_1(7).r() == 1 + (8 - 2) / 3);
    CHECK(factor_xn_minus_1(31).r() == 1 + (32 - 2) / 5);
    const auto ctx31 = factor_xn_minus_1(31);
    CHECK(ctx31.lambda == 1);
    CHECK(ctx31.pairs == 3);
    for (int i = 1; i < ctx31.r(); ++i) CHECK(ctx31.m(i) == 5);
}
