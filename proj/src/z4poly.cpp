#include "nega/z4poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nega {

namespace {

void canon4(std::vector<std::uint8_t>& c) {
    for (auto& x : c) x &= 3;
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void canon2(std::vector<std::uint8_t>& c) {
    for (auto& x : c) x &= 1;
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Z4Poly::Z4Poly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) { canon4(c_); }

Z4Poly Z4Poly::constant(int c) {
    return Z4Poly({static_cast<std::uint8_t>(((c % 4) + 4) % 4)});
}

Z4Poly Z4Poly::x_pow(std::size_t j, int c) {
    std::vector<std::uint8_t> v(j + 1, 0);
    v[j] = static_cast<std::uint8_t>(((c % 4) + 4) % 4);
    return Z4Poly(std::move(v));
}

Z4Poly Z4Poly::from_string(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::uint8_t> v;
    long c;
    while (in >> c) v.push_back(static_cast<std::uint8_t>(((c % 4) + 4) % 4));
    if (!in.eof()) throw std::invalid_argument("Z4Poly: bad coefficient token");
    return Z4Poly(std::move(v));
}

std::string Z4Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ' ';
        s += static_cast<char>('0' + c_[i]);
    }
    return s;
}

Z4Poly operator+(const Z4Poly& p, const Z4Poly& q) {
    std::vector<std::uint8_t> r(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p.coeff(i) + q.coeff(i)) & 3;
    return Z4Poly(std::move(r));
}

Z4Poly operator-(const Z4Poly& p, const Z4Poly& q) {
    std::vector<std::uint8_t> r(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (4 + p.coeff(i) - q.coeff(i)) & 3;
    return Z4Poly(std::move(r));
}

Z4Poly operator-(const Z4Poly& p) { return Z4Poly() - p; }

Z4Poly operator*(const Z4Poly& p, const Z4Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<std::uint8_t> r(p.coeffs().size() + q.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const std::uint8_t a = p.coeffs()[i];
        if (!a) continue;
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            r[i + j] = (r[i + j] + a * q.coeffs()[j]) & 3;
    }
    return Z4Poly(std::move(r));
}

Z4DivMod divmod(const Z4Poly& p, const Z4Poly& d) {
    if (!d.is_monic()) throw std::invalid_argument("divmod: divisor must be monic over Z4");
    std::vector<std::uint8_t> r(p.coeffs());
    const std::size_t dd = d.coeffs().size();
    if (r.size() < dd) return {Z4Poly(), p};
    std::vector<std::uint8_t> q(r.size() - dd + 1, 0);
    for (std::size_t k = r.size(); k-- >= dd;) {
        const std::uint8_t c = r[k];
        if (c) {
            q[k - dd + 1] = c;
            for (std::size_t i = 0; i < dd; ++i)
                r[k - dd + 1 + i] = (4 + r[k - dd + 1 + i] - c * d.coeffs()[i] % 4) & 3;
        }
        if (k == dd - 1) break;
    }
    return {Z4Poly(std::move(q)), Z4Poly(std::move(r))};
}

Z4Poly mul_mod(const Z4Poly& p, const Z4Poly& q, const Z4Poly& modulus) {
    return divmod(p * q, modulus).rem;
}

Z4Poly reduce_negacyclic(const Z4Poly& p, std::size_t N) {
    std::vector<std::uint8_t> r(N, 0);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const std::size_t q = j / N, s = j % N;
        const int sign = (q & 1) ? -1 : 1;
        r[s] = static_cast<std::uint8_t>((r[s] + sign * p.coeffs()[j] + 8) & 3);
    }
    return Z4Poly(std::move(r));
}

Z4Poly mul_negacyclic(const Z4Poly& p, const Z4Poly& q, std::size_t N) {
    return reduce_negacyclic(p * q, N);
}

Z4Poly substitute_neg_x2(const Z4Poly& p) {
    if (p.is_zero()) return {};
    std::vector<std::uint8_t> r(2 * p.coeffs().size() - 1, 0);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const int sign = (j & 1) ? -1 : 1;
        r[2 * j] = static_cast<std::uint8_t>((sign * p.coeffs()[j] + 8) & 3);
    }
    return Z4Poly(std::move(r));
}

Z4Poly reciprocal(const Z4Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("reciprocal: zero polynomial");
    std::vector<std::uint8_t> r(p.coeffs().rbegin(), p.coeffs().rend());
    return Z4Poly(std::move(r));
}

// ---------------------------------------------------------------- F2Poly

F2Poly::F2Poly(std::vector<std::uint8_t> bits) : b_(std::move(bits)) { canon2(b_); }

F2Poly F2Poly::x_pow(std::size_t j) {
    std::vector<std::uint8_t> v(j + 1, 0);
    v[j] = 1;
    return F2Poly(std::move(v));
}

F2Poly F2Poly::from_string(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::uint8_t> v;
    long c;
    while (in >> c) v.push_back(static_cast<std::uint8_t>(((c % 2) + 2) % 2));
    if (!in.eof()) throw std::invalid_argument("F2Poly: bad coefficient token");
    return F2Poly(std::move(v));
}

std::string F2Poly::to_string() const {
    if (b_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (i) s += ' ';
        s += static_cast<char>('0' + b_[i]);
    }
    return s;
}

F2Poly operator+(const F2Poly& p, const F2Poly& q) {
    std::vector<std::uint8_t> r(std::max(p.bits().size(), q.bits().size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p.coeff(i) ^ q.coeff(i)) & 1;
    return F2Poly(std::move(r));
}

F2Poly operator*(const F2Poly& p, const F2Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<std::uint8_t> r(p.bits().size() + q.bits().size() - 1, 0);
    for (std::size_t i = 0; i < p.bits().size(); ++i) {
        if (!p.bits()[i]) continue;
        for (std::size_t j = 0; j < q.bits().size(); ++j) r[i + j] ^= q.bits()[j];
    }
    return F2Poly(std::move(r));
}

F2DivMod divmod(const F2Poly& p, const F2Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("F2 divmod: zero divisor");
    std::vector<std::uint8_t> r(p.bits());
    const std::size_t dd = d.bits().size();
    if (r.size() < dd) return {F2Poly(), p};
    std::vector<std::uint8_t> q(r.size() - dd + 1, 0);
    for (std::size_t k = r.size(); k-- >= dd;) {
        if (r[k]) {
            q[k - dd + 1] = 1;
            for (std::size_t i = 0; i < dd; ++i) r[k - dd + 1 + i] ^= d.bits()[i];
        }
        if (k == dd - 1) break;
    }
    return {F2Poly(std::move(q)), F2Poly(std::move(r))};
}

F2Poly mod(const F2Poly& p, const F2Poly& d) { return divmod(p, d).rem; }

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

F2Bezout gcdext(const F2Poly& a, const F2Poly& b) {
    F2Poly r0 = a, r1 = b;
    F2Poly s0 = F2Poly::one(), s1;
    F2Poly t0, t1 = F2Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        F2Poly s2 = s0 + q * s1;
        s0 = s1;
        s1 = s2;
        F2Poly t2 = t0 + q * t1;
        t0 = t1;
        t1 = t2;
    }
    return {r0, s0, t0};
}

F2Poly powmod(const F2Poly& base, unsigned long long e, const F2Poly& modulus) {
    F2Poly r = mod(F2Poly::one(), modulus);
    F2Poly b = mod(base, modulus);
    while (e) {
        if (e & 1) r = mod(r * b, modulus);
        b = mod(b * b, modulus);
        e >>= 1;
    }
    return r;
}

F2Poly project_mod2(const Z4Poly& p) {
    std::vector<std::uint8_t> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i] & 1;
    return F2Poly(std::move(r));
}

Z4Poly lift_to_z4(const F2Poly& p) { return Z4Poly(std::vector<std::uint8_t>(p.bits())); }

bool is_irreducible(const F2Poly& f) {
    const int m = f.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    // x^{2^m} == x mod f, and gcd(x^{2^{m/p}} - x, f) == 1 for prime p | m
    const F2Poly x = F2Poly::x_pow(1);
    F2Poly t = x;
    for (int i = 0; i < m; ++i) t = mod(t * t, f);
    if (!(t + x).is_zero()) return false;
    for (int p = 2; p <= m; ++p) {
        if (m % p) continue;
        bool isprime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) isprime = false;
        if (!isprime) continue;
        F2Poly u = x;
        for (int i = 0; i < m / p; ++i) u = mod(u * u, f);
        if (gcd(u + x, f).degree() != 0) return false;
    }
    return true;
}

std::vector<F2Poly> factor_squarefree_f2(const F2Poly& f) {
    const int n = f.degree();
    if (n <= 0) throw std::invalid_argument("factor_squarefree_f2: constant input");
    // Frobenius matrix Q: row i = x^{2i} mod f
    std::vector<std::vector<std::uint8_t>> B(n, std::vector<std::uint8_t>(n, 0));
    F2Poly xi = F2Poly::one();
    const F2Poly x2 = mod(F2Poly::x_pow(2), f);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) B[i][j] = xi.coeff(j);
        B[i][i] ^= 1;  // Q - I
        xi = mod(xi * x2, f);
    }
    // nullspace basis of B^T v = 0 ... we need v with v*Q = v, i.e. rows combine:
    // solve v B = 0 over F2 (v as row vector). Transpose then eliminate.
    std::vector<std::vector<std::uint8_t>> M(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[j][i] = B[i][j];
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row)
            if (M[row][col]) {
                sel = row;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[sel], M[rank]);
        for (int row = 0; row < n; ++row)
            if (row != rank && M[row][col])
                for (int j = 0; j < n; ++j) M[row][j] ^= M[rank][j];
        pivot_col[rank++] = col;
    }
    std::vector<F2Poly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(n, 0);
        v[free] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = M[i][free];
        basis.push_back(F2Poly(std::move(v)));
    }
    const std::size_t r = basis.size();
    std::vector<F2Poly> factors{f};
    for (const auto& v : basis) {
        if (factors.size() == r) break;
        if (v.degree() <= 0) continue;
        std::vector<F2Poly> next;
        for (const auto& u : factors) {
            if (u.degree() <= 1) {
                next.push_back(u);
                continue;
            }
            F2Poly g0 = gcd(mod(v, u), u);
            if (g0.degree() <= 0 || g0.degree() == u.degree()) {
                F2Poly g1 = gcd(mod(v + F2Poly::one(), u), u);
                if (g1.degree() <= 0 || g1.degree() == u.degree()) {
                    next.push_back(u);
                    continue;
                }
                g0 = g1;
            }
            next.push_back(g0);
            next.push_back(divmod(u, g0).quot);
        }
        factors = std::move(next);
    }
    if (factors.size() != r) throw std::logic_error("berlekamp: split incomplete");
    return factors;
}

std::pair<Z4Poly, Z4Poly> hensel_lift_factor(const F2Poly& fbar, const F2Poly& gbar,
                                             const Z4Poly& target) {
    if (!target.is_monic()) throw std::invalid_argument("hensel_lift_factor: target not monic");
    if (!(project_mod2(target) == fbar * gbar))
        throw std::invalid_argument("hensel_lift_factor: fbar*gbar != target mod 2");
    const F2Bezout bz = gcdext(gbar, fbar);
    if (!bz.g.is_one()) throw std::invalid_argument("hensel_lift_factor: factors not coprime mod 2");
    const Z4Poly f0 = lift_to_z4(fbar), g0 = lift_to_z4(gbar);
    const Z4Poly e = target - f0 * g0;  // every coefficient even
    std::vector<std::uint8_t> hb(e.coeffs().size());
    for (std::size_t i = 0; i < hb.size(); ++i) hb[i] = (e.coeffs()[i] >> 1) & 1;
    const F2Poly h(std::move(hb));
    const F2Poly u = mod(bz.u * h, fbar);
    const auto [w, rem] = divmod(h + u * gbar, fbar);
    if (!rem.is_zero()) throw std::logic_error("hensel_lift_factor: inexact cofactor division");
    Z4Poly two = Z4Poly::constant(2);
    Z4Poly f = f0 + two * lift_to_z4(u);
    Z4Poly g = g0 + two * lift_to_z4(w);
    if (!(f * g == target)) throw std::logic_error("hensel_lift_factor: lift verification failed");
    return {f, g};
}

std::pair<Z4Poly, Z4Poly> lift_bezout(const F2Poly& a2, const F2Poly& b2, const Z4Poly& F,
                                      const Z4Poly& f) {
    const F2Poly check = a2 * project_mod2(F) + b2 * project_mod2(f);
    if (!check.is_one()) throw std::invalid_argument("lift_bezout: not a mod-2 Bezout pair");
    const Z4Poly u = lift_to_z4(a2) * F + lift_to_z4(b2) * f;
    const Z4Poly tw = Z4Poly::constant(2) - u;
    Z4Poly a = lift_to_z4(a2) * tw, b = lift_to_z4(b2) * tw;
    if (!(a * F + b * f == Z4Poly::constant(1)))
        throw std::logic_error("lift_bezout: exact identity failed");
    return {a, b};
}

}  // namespace nega
