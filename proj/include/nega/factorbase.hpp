#ifndef NEGA_FACTORBASE_HPP
#define NEGA_FACTORBASE_HPP

#include <vector>

#include "nega/chainring.hpp"
#include "nega/z4poly.hpp"

namespace nega {

/// Complete factorization data for x^n - 1 over Z4 (n odd), in the mu-layout:
/// indices 0..lambda-1 are mu-fixed, index lambda+j pairs with lambda+pairs+j.
///
/// Factor ordering is deterministic: f_1 = x-1 first, remaining factors sorted
/// by (degree, lexicographic Z4 coefficients) before the mu-layout reordering;
/// pair representatives (the smaller factor in that order) occupy the first
/// half of the paired block.
struct FactorizationContext {
    int n = 0;
    std::vector<Z4Poly> factors;       // monic basic irreducible, product = x^n - 1
    std::vector<Z4Poly> idempotents;   // eps_i mod x^{2n}+1, sum = 1, orthogonal
    std::vector<int> mu;               // involution on 0..r-1
    std::vector<int> delta;            // signs: reciprocal(f_i) = delta_i * f_{mu(i)}
    int lambda = 0;                    // number of mu-fixed indices
    int pairs = 0;                     // number of swapped pairs (epsilon)
    std::vector<ChainRing> rings;      // K_i = Z4[x]/<f_i(-x^2)>

    int r() const noexcept { return static_cast<int>(factors.size()); }
    int m(int i) const { return rings[i].m(); }
};

/// Factors x^n - 1 (n odd, n >= 1) by factoring mod 2 and Hensel lifting, then
/// computes idempotents, mu/delta and the chain rings. Throws on even or
/// nonpositive n.
FactorizationContext factor_xn_minus_1(int n);

/// The idempotents eps_i = a_i(-x^2) F_i(-x^2) mod x^{2n}+1 (cached in the
/// context by factor_xn_minus_1; exposed for oracle-style recomputation).
std::vector<Z4Poly> compute_idempotents(int n, const std::vector<Z4Poly>& factors);

/// mu and delta for an ordered factor list: reciprocal(f_i) = delta_i f_{mu(i)}.
void compute_mu_delta(const std::vector<Z4Poly>& factors, std::vector<int>& mu,
                      std::vector<int>& delta);

/// mu_i: K_i -> K_{mu(i)}, e(x) -> e(-x^{2n-1}) mod f_{mu(i)}(-x^2).
Z4Poly conjugate_mu(const FactorizationContext& ctx, int i, const Z4Poly& e);

/// Substitution a(x) -> a(-x^{2n-1}) mod x^{2n}+1 (the ambient-ring mu).
Z4Poly ambient_mu(const Z4Poly& a, int n);

}  // namespace nega

#endif
