#include "nega/chainring.hpp"

#include <stdexcept>

namespace nega {

namespace {

// g = ((-1)^m f(-x^2) - f(x)^2) / 2 computed exactly over Z from the
// symmetric lift of f (3 -> -1), then reduced mod (4, modulus). Any unit
// lift with 2g = f^2 works; the symmetric lift matches f = x-1 -> g = x.
Z4Poly compute_g(const Z4Poly& f, const Z4Poly& modulus) {
    const std::size_t m = f.coeffs().size() - 1;
    std::vector<long long> fz(f.coeffs().size());
    for (std::size_t i = 0; i < fz.size(); ++i)
        fz[i] = f.coeffs()[i] == 3 ? -1 : static_cast<long long>(f.coeffs()[i]);
    std::vector<long long> fneg(2 * m + 1, 0);
    for (std::size_t j = 0; j < fz.size(); ++j) fneg[2 * j] = (j & 1) ? -fz[j] : fz[j];
    std::vector<long long> fsq(2 * m + 1, 0);
    for (std::size_t i = 0; i < fz.size(); ++i)
        for (std::size_t j = 0; j < fz.size(); ++j) fsq[i + j] += fz[i] * fz[j];
    const long long sign = (m & 1) ? -1 : 1;
    std::vector<std::uint8_t> g(2 * m + 1, 0);
    for (std::size_t i = 0; i <= 2 * m; ++i) {
        const long long d = sign * fneg[i] - fsq[i];
        if (d & 1) throw std::logic_error("chain ring: odd coefficient in f^2 defect");
        g[i] = static_cast<std::uint8_t>(((d / 2) % 4 + 4) % 4);
    }
    return divmod(Z4Poly(std::move(g)), modulus).rem;
}

}  // namespace

ChainRing::ChainRing(Z4Poly f) : f_(std::move(f)) {
    if (!f_.is_monic()) throw std::invalid_argument("ChainRing: f must be monic");
    m_ = f_.degree();
    fbar_ = project_mod2(f_);
    if (fbar_.degree() != m_ || !is_irreducible(fbar_))
        throw std::invalid_argument("ChainRing: f is not basic irreducible");
    Z4Poly M = substitute_neg_x2(f_);
    if (m_ & 1) M = -M;
    mod_ = M;
    g_ = compute_g(f_, mod_);
    omega_ = invert_unit(g_);
    if (!(mul(f_, f_) == mul(Z4Poly::constant(2), g_)))
        throw std::logic_error("ChainRing: f^2 != 2g");
    if (!(mul(g_, omega_) == Z4Poly::constant(1)))
        throw std::logic_error("ChainRing: g*omega != 1");
}

bool ChainRing::is_unit(const Z4Poly& e) const {
    return gcd(project_mod2(e), fbar_).degree() == 0 && !project_mod2(e).is_zero();
}

Z4Poly ChainRing::invert_unit(const Z4Poly& u) const {
    const F2Poly mbar = project_mod2(mod_);
    const F2Bezout bz = gcdext(mod(project_mod2(u), mbar), mbar);
    if (!bz.g.is_one()) throw std::invalid_argument("invert_unit: not a unit");
    const Z4Poly v0 = lift_to_z4(bz.u);
    const Z4Poly v1 = mul(v0, Z4Poly::constant(2) - mul(u, v0));
    if (!(mul(u, v1) == Z4Poly::constant(1))) throw std::logic_error("invert_unit: lift failed");
    return v1;
}

std::array<Z4Poly, 4> ChainRing::f_adic_expand(const Z4Poly& e) const {
    const auto t_of = [&](const F2Poly& p) { return lift_to_z4(mod(p, fbar_)); };
    const auto exact_div_fbar = [&](const F2Poly& p) {
        auto [q, r] = divmod(p, fbar_);
        if (!r.is_zero()) throw std::logic_error("f_adic_expand: inexact division");
        return q;
    };
    const Z4Poly e0 = reduce(e);
    const Z4Poly t0 = t_of(project_mod2(e0));
    const Z4Poly e1 = sub(e0, t0);  // in <f>
    const Z4Poly t1 = t_of(exact_div_fbar(project_mod2(e1)));
    const Z4Poly e2 = sub(e1, mul(t1, f_));  // in <f^2> = <2>, even coefficients
    std::vector<std::uint8_t> hb(e2.coeffs().size());
    for (std::size_t i = 0; i < hb.size(); ++i) {
        if (e2.coeffs()[i] & 1) throw std::logic_error("f_adic_expand: odd coefficient in <2>");
        hb[i] = e2.coeffs()[i] >> 1;
    }
    const Z4Poly w = mul(omega_, Z4Poly(std::move(hb)));  // e2 = f^2 * w  (mod 2K ambiguity)
    const Z4Poly t2 = t_of(project_mod2(w));
    const Z4Poly t3 = t_of(exact_div_fbar(project_mod2(sub(w, t2))));
    return {t0, t1, t2, t3};
}

Z4Poly ChainRing::f_adic_compose(const std::array<Z4Poly, 4>& t) const {
    Z4Poly acc = t[0];
    Z4Poly fp = f_;
    for (int j = 1; j < 4; ++j) {
        acc = add(acc, mul(t[j], fp));
        fp = mul(fp, f_);
    }
    return reduce(acc);
}

int ChainRing::pi_degree(const Z4Poly& e) const {
    const auto t = f_adic_expand(e);
    for (int j = 0; j < 4; ++j)
        if (!t[j].is_zero()) return j;
    return 4;
}

Z4Poly ChainRing::pi_shift_down(const Z4Poly& e, int k) const {
    const auto t = f_adic_expand(e);
    for (int j = 0; j < k; ++j)
        if (!t[j].is_zero()) throw std::invalid_argument("pi_shift_down: pi-degree too small");
    Z4Poly acc;
    Z4Poly fp = Z4Poly::constant(1);
    for (int j = k; j < 4; ++j) {
        acc = add(acc, mul(t[j], fp));
        fp = mul(fp, f_);
    }
    return acc;
}

Z4Poly ChainRing::pi_pow(int k) const {
    Z4Poly r = Z4Poly::constant(1);
    for (int j = 0; j < k; ++j) r = mul(r, f_);
    return r;
}

Z4Poly ChainRing::t_elem(std::uint64_t idx) const {
    std::vector<std::uint8_t> c(m_, 0);
    for (int j = 0; j < m_; ++j) c[j] = (idx >> j) & 1;
    return Z4Poly(std::move(c));
}

std::uint64_t ChainRing::t_index(const F2Poly& p) const {
    std::uint64_t idx = 0;
    for (int j = 0; j < m_; ++j) idx |= static_cast<std::uint64_t>(p.coeff(j)) << j;
    return idx;
}

F2Poly ChainRing::t_residue(const Z4Poly& e) const { return mod(project_mod2(reduce(e)), fbar_); }

std::vector<Z4Poly> ChainRing::elements() const {
    if (m_ > 3) throw std::invalid_argument("ChainRing::elements: ring too large to materialize");
    const std::size_t n = 2 * static_cast<std::size_t>(m_);
    std::vector<Z4Poly> out;
    out.reserve(std::size_t(1) << (2 * n));
    std::vector<std::uint8_t> c(n, 0);
    while (true) {
        out.push_back(Z4Poly(std::vector<std::uint8_t>(c)));
        std::size_t i = 0;
        while (i < n && c[i] == 3) c[i++] = 0;
        if (i == n) break;
        ++c[i];
    }
    return out;
}

}  // namespace nega
