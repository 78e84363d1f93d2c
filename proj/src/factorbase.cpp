#include "nega/factorbase.hpp"

#include <algorithm>
#include <stdexcept>

namespace nega {

namespace {

Z4Poly xn_minus_1(int n) {
    std::vector<std::uint8_t> c(n + 1, 0);
    c[0] = 3;
    c[n] = 1;
    return Z4Poly(std::move(c));
}

bool lex_less(const Z4Poly& a, const Z4Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

}  // namespace

void compute_mu_delta(const std::vector<Z4Poly>& factors, std::vector<int>& mu,
                      std::vector<int>& delta) {
    const int r = static_cast<int>(factors.size());
    mu.assign(r, -1);
    delta.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        const Z4Poly rec = reciprocal(factors[i]);
        for (int j = 0; j < r; ++j) {
            if (rec == factors[j]) {
                mu[i] = j;
                delta[i] = 1;
                break;
            }
            if (rec == -factors[j]) {
                mu[i] = j;
                delta[i] = -1;
                break;
            }
        }
        if (mu[i] < 0) throw std::logic_error("compute_mu_delta: reciprocal not an associate");
    }
}

std::vector<Z4Poly> compute_idempotents(int n, const std::vector<Z4Poly>& factors) {
    const Z4Poly target = xn_minus_1(n);
    const std::size_t N = 2 * static_cast<std::size_t>(n);
    std::vector<Z4Poly> eps;
    eps.reserve(factors.size());
    for (const auto& f : factors) {
        const auto [F, rem] = divmod(target, f);
        if (!rem.is_zero()) throw std::logic_error("compute_idempotents: factor does not divide");
        const F2Bezout bz = gcdext(project_mod2(F), project_mod2(f));
        if (!bz.g.is_one()) throw std::logic_error("compute_idempotents: factors not coprime");
        const auto [a, b] = lift_bezout(bz.u, bz.v, F, f);
        eps.push_back(mul_negacyclic(substitute_neg_x2(a), substitute_neg_x2(F), N));
    }
    // orthogonal idempotents summing to 1
    Z4Poly sum;
    for (const auto& e : eps) sum = sum + e;
    if (!(sum == Z4Poly::constant(1))) throw std::logic_error("idempotents: sum != 1");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(mul_negacyclic(eps[i], eps[i], N) == eps[i]))
            throw std::logic_error("idempotents: not idempotent");
        for (std::size_t j = i + 1; j < eps.size(); ++j)
            if (!mul_negacyclic(eps[i], eps[j], N).is_zero())
                throw std::logic_error("idempotents: not orthogonal");
    }
    return eps;
}

FactorizationContext factor_xn_minus_1(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("factor_xn_minus_1: n must be odd, >= 1");
    FactorizationContext ctx;
    ctx.n = n;

    // factor mod 2, lift factor-by-factor against the remaining cofactor
    std::vector<std::uint8_t> tb(n + 1, 0);
    tb[0] = 1;
    tb[n] = 1;
    std::vector<F2Poly> fbars = factor_squarefree_f2(F2Poly(std::move(tb)));
    std::vector<Z4Poly> lifted;
    Z4Poly rem_target = xn_minus_1(n);
    F2Poly rem_bar = project_mod2(rem_target);
    for (std::size_t k = 0; k + 1 < fbars.size(); ++k) {
        const F2Poly gb = divmod(rem_bar, fbars[k]).quot;
        auto [f, g] = hensel_lift_factor(fbars[k], gb, rem_target);
        lifted.push_back(f);
        rem_target = g;
        rem_bar = gb;
    }
    lifted.push_back(rem_target);

    // deterministic order: x-1 first, then (degree, lex)
    const Z4Poly xm1 = Z4Poly::from_string("3 1");
    std::erase(lifted, xm1);
    std::sort(lifted.begin(), lifted.end(), lex_less);
    lifted.insert(lifted.begin(), xm1);

    // mu-layout reordering
    std::vector<int> mu, delta;
    compute_mu_delta(lifted, mu, delta);
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(lifted.size()); ++i)
        if (mu[i] == i) order.push_back(i);
    const int lambda = static_cast<int>(order.size());
    std::vector<std::pair<int, int>> pairlist;
    std::vector<bool> seen(lifted.size(), false);
    for (int i = 0; i < static_cast<int>(lifted.size()); ++i) {
        if (mu[i] == i || seen[i]) continue;
        int a = i, b = mu[i];
        if (lex_less(lifted[b], lifted[a])) std::swap(a, b);
        pairlist.emplace_back(a, b);
        seen[a] = seen[b] = true;
    }
    std::sort(pairlist.begin(), pairlist.end(),
              [&](const auto& p, const auto& q) { return lex_less(lifted[p.first], lifted[q.first]); });
    for (const auto& [a, b] : pairlist) order.push_back(a);
    for (const auto& [a, b] : pairlist) order.push_back(b);
    std::vector<Z4Poly> ordered;
    for (int idx : order) ordered.push_back(lifted[idx]);
    ctx.factors = std::move(ordered);
    ctx.lambda = lambda;
    ctx.pairs = static_cast<int>(pairlist.size());
    compute_mu_delta(ctx.factors, ctx.mu, ctx.delta);
    for (int i = 0; i < lambda; ++i)
        if (ctx.mu[i] != i) throw std::logic_error("factor_xn_minus_1: mu layout broken");
    for (int j = 0; j < ctx.pairs; ++j)
        if (ctx.mu[lambda + j] != lambda + ctx.pairs + j)
            throw std::logic_error("factor_xn_minus_1: mu layout broken");

    ctx.idempotents = compute_idempotents(n, ctx.factors);
    ctx.rings.reserve(ctx.factors.size());
    for (const auto& f : ctx.factors) ctx.rings.emplace_back(f);
    return ctx;
}

Z4Poly conjugate_mu(const FactorizationContext& ctx, int i, const Z4Poly& e) {
    if (i < 0 || i >= ctx.r()) throw std::invalid_argument("conjugate_mu: bad factor index");
    const ChainRing& target = ctx.rings[ctx.mu[i]];
    // Horner evaluation of e at q = -x^{2n-1} inside K_{mu(i)}
    const Z4Poly q = target.reduce(Z4Poly::x_pow(2 * static_cast<std::size_t>(ctx.n) - 1, -1));
    Z4Poly res;
    for (int j = e.degree(); j >= 0; --j)
        res = target.add(target.mul(res, q), Z4Poly::constant(e.coeff(j)));
    return res;
}

Z4Poly ambient_mu(const Z4Poly& a, int n) {
    const std::size_t N = 2 * static_cast<std::size_t>(n);
    const Z4Poly q = reduce_negacyclic(Z4Poly::x_pow(N - 1, -1), N);
    Z4Poly res;
    for (int j = a.degree(); j >= 0; --j)
        res = mul_negacyclic(res, q, N) + Z4Poly::constant(a.coeff(j));
    return res;
}

}  // namespace nega
