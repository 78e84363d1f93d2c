#ifndef NEGA_CHAINRING_HPP
#define NEGA_CHAINRING_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "nega/z4poly.hpp"

namespace nega {

/// K_f = Z4[x]/<f(-x^2)> for a monic basic irreducible f of degree m:
/// a finite chain ring of length 4 with maximal ideal <f(x)>.
///
/// Elements are Z4Poly residues of degree < 2m. The modulus is f(-x^2)
/// normalized monic (negated when m is odd; the ideal is unchanged).
/// Construction computes the unit g with f^2 = 2g, its inverse omega,
/// and verifies both identities before returning.
class ChainRing {
   public:
    explicit ChainRing(Z4Poly f);

    const Z4Poly& f() const noexcept { return f_; }
    int m() const noexcept { return m_; }
    const Z4Poly& modulus() const noexcept { return mod_; }
    const Z4Poly& g() const noexcept { return g_; }
    const Z4Poly& omega() const noexcept { return omega_; }

    Z4Poly reduce(const Z4Poly& p) const { return divmod(p, mod_).rem; }
    Z4Poly add(const Z4Poly& a, const Z4Poly& b) const { return a + b; }
    Z4Poly sub(const Z4Poly& a, const Z4Poly& b) const { return a - b; }
    Z4Poly mul(const Z4Poly& a, const Z4Poly& b) const { return divmod(a * b, mod_).rem; }
    Z4Poly mul(const Z4Poly& a, const Z4Poly& b, const Z4Poly& c) const {
        return mul(mul(a, b), c);
    }

    bool is_unit(const Z4Poly& e) const;
    /// Inverse of a unit: extended Euclid in F2[x] mod the modulus image,
    /// then one Newton step to Z4. Throws on non-units.
    Z4Poly invert_unit(const Z4Poly& u) const;

    /// Digits (t0,t1,t2,t3) in T_f with e = t0 + t1 f + t2 f^2 + t3 f^3.
    std::array<Z4Poly, 4> f_adic_expand(const Z4Poly& e) const;
    Z4Poly f_adic_compose(const std::array<Z4Poly, 4>& t) const;
    /// Least j with t_j != 0; 4 for the zero element. Units have degree 0.
    int pi_degree(const Z4Poly& e) const;
    /// Some y with f^k y = e; requires pi_degree(e) >= k.
    Z4Poly pi_shift_down(const Z4Poly& e, int k) const;
    Z4Poly pi_pow(int k) const;

    // T_f = F2-coefficient polynomials of degree < m, indexed by bit j = coeff of x^j.
    std::uint64_t t_size() const noexcept { return std::uint64_t(1) << m_; }
    Z4Poly t_elem(std::uint64_t idx) const;
    std::uint64_t t_index(const F2Poly& p) const;
    /// Residue of e in T_f, i.e. e mod (2, fbar) as an F2 polynomial of degree < m.
    F2Poly t_residue(const Z4Poly& e) const;

    /// All 4^{2m} elements, in base-4 coefficient order. Guarded for small m.
    std::vector<Z4Poly> elements() const;
    std::uint64_t size_log2_guard() const noexcept { return 4u * m_; }  // log2 |K|

    const F2Poly& fbar() const noexcept { return fbar_; }

   private:
    Z4Poly f_;
    int m_;
    Z4Poly mod_;
    Z4Poly g_, omega_;
    F2Poly fbar_;
};

}  // namespace nega

#endif
