#include "nega/negacode.hpp"

#include <algorithm>
#include <stdexcept>

namespace nega {

namespace {

cpp_int ideals_count_for_m(int m) {
    cpp_int c = cpp_int(1) << (2 * m);
    c += 5 * (cpp_int(1) << m);
    c += 9;
    return c;
}

bool is_prime_small(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// p(z) by Horner in F2[x]/mod
F2Poly eval_f2(const F2Poly& p, const F2Poly& z, const F2Poly& modulus) {
    F2Poly res;
    for (int j = p.degree(); j >= 0; --j) {
        res = mod(res * z, modulus);
        if (p.coeff(j)) res = res + F2Poly::one();
    }
    return res;
}

}  // namespace

NegacyclicCode assemble(const FactorizationContext& ctx, std::vector<IdealSpec> components) {
    if (static_cast<int>(components.size()) != ctx.r())
        throw std::invalid_argument("assemble: need one component per factor");
    for (int i = 0; i < ctx.r(); ++i)
        components[i] = make_ideal_spec(components[i].family, components[i].a, components[i].b,
                                        ctx.m(i));
    return {ctx.n, std::move(components)};
}

cpp_int code_cardinality(const FactorizationContext& ctx, const NegacyclicCode& code) {
    if (code.n != ctx.n) throw std::invalid_argument("code_cardinality: context mismatch");
    cpp_int c = 1;
    for (int i = 0; i < ctx.r(); ++i) c *= ideal_cardinality(code.components[i], ctx.m(i));
    return c;
}

cpp_int count_codes(const FactorizationContext& ctx) {
    cpp_int c = 1;
    for (int i = 0; i < ctx.r(); ++i) c *= ideals_count_for_m(ctx.m(i));
    return c;
}

cpp_int count_selfdual(const FactorizationContext& ctx) {
    cpp_int c = 1;
    for (int i = 0; i < ctx.lambda; ++i) {
        const WSets w = w_sets(ctx, i);
        c *= 1 + w.w1.size() + w.w2.size();
    }
    for (int j = 0; j < ctx.pairs; ++j) c *= ideals_count_for_m(ctx.m(ctx.lambda + j));
    return c;
}

cpp_int count_codes_mersenne(int p) {
    const cpp_int base = ideals_count_for_m(p);
    const long long mp = (1LL << p) - 1;
    if (!is_prime_small(p) || !is_prime_small(mp))
        throw std::invalid_argument("count_codes_mersenne: 2^p - 1 is not a Mersenne prime");
    const int e = static_cast<int>(((1LL << (p - 1)) - 1) / p);
    cpp_int r = boost::multiprecision::pow(base, 2 * e);
    r *= 23;
    return r;
}

cpp_int count_selfdual_mersenne(int p) {
    const cpp_int base = ideals_count_for_m(p);
    const long long mp = (1LL << p) - 1;
    if (!is_prime_small(p) || !is_prime_small(mp))
        throw std::invalid_argument("count_selfdual_mersenne: 2^p - 1 is not a Mersenne prime");
    const int e = static_cast<int>(((1LL << (p - 1)) - 1) / p);
    cpp_int r = boost::multiprecision::pow(base, e);
    r *= 3;
    return r;
}

IdealSpec dual_component(const FactorizationContext& ctx, int i, const IdealSpec& spec) {
    const int j = ctx.mu[i];
    const F2Poly& fbj = ctx.rings[j].fbar();
    const int mi = ctx.m(i);
    // x is a unit mod fbar_j (fbar_j | x^n - 1); its inverse is x^{n-1}
    const F2Poly z = powmod(F2Poly::x_pow(1), static_cast<unsigned long long>(ctx.n) - 1, fbj);
    const F2Poly xw =
        powmod(F2Poly::x_pow(1), 2ull * static_cast<unsigned long long>(ctx.n) - mi, fbj);
    const auto conj = [&](const F2Poly& p) { return eval_f2(p, z, fbj); };
    const auto onep = [&](const F2Poly& p) { return p + F2Poly::one(); };
    const auto twist = [&](const F2Poly& p) { return mod(xw * conj(p), fbj); };
    const int mj = ctx.m(j);
    switch (spec.family) {
        case Family::F1: {
            // The generator is 2c + v with c = (1+a)(x^{-1}) + x^{2n-m_i} b(x^{-1}) f_j
            // up to signs that vanish mod 2. The table parameters are the first
            // two f_j-adic digits of c, so the conjugate of 1+a must be taken in
            // F2[x]/<fbar_j^2>: its fbar_j-quotient feeds the b-parameter.
            const F2Poly fb2 = fbj * fbj;
            const F2Poly z2 =
                powmod(F2Poly::x_pow(1), 2ull * static_cast<unsigned long long>(ctx.n) - 1, fb2);
            const F2Poly pa = eval_f2(*spec.a + F2Poly::one(), z2, fb2);
            const auto [q, rem] = divmod(pa, fbj);
            return make_ideal_spec(Family::F1, rem, mod(q, fbj) + twist(*spec.b), mj);
        }
        case Family::F2: return make_ideal_spec(Family::F10, {}, {}, mj);
        case Family::F3: return make_ideal_spec(Family::F11, {}, twist(*spec.b), mj);
        case Family::F4: return make_ideal_spec(Family::F12, onep(conj(*spec.a)), {}, mj);
        case Family::F5: return make_ideal_spec(Family::F9, {}, {}, mj);
        case Family::F6: return make_ideal_spec(Family::F8, {}, {}, mj);
        case Family::F7: return make_ideal_spec(Family::F7, {}, {}, mj);
        case Family::F8: return make_ideal_spec(Family::F6, {}, {}, mj);
        case Family::F9: return make_ideal_spec(Family::F5, {}, {}, mj);
        case Family::F10: return make_ideal_spec(Family::F2, {}, {}, mj);
        case Family::F11: return make_ideal_spec(Family::F3, {}, twist(*spec.b), mj);
        case Family::F12: return make_ideal_spec(Family::F4, onep(conj(*spec.a)), {}, mj);
        case Family::F13: return make_ideal_spec(Family::F14, {}, {}, mj);
        case Family::F14: return make_ideal_spec(Family::F13, {}, {}, mj);
        case Family::F15: {
            const F2Poly xm = powmod(F2Poly::x_pow(1), static_cast<unsigned long long>(mi), fbj);
            return make_ideal_spec(Family::F15, {}, mod(xm * conj(*spec.b), fbj), mj);
        }
    }
    throw std::logic_error("dual_component: bad family");
}

NegacyclicCode dual(const FactorizationContext& ctx, const NegacyclicCode& code) {
    if (code.n != ctx.n) throw std::invalid_argument("dual: context mismatch");
    std::vector<IdealSpec> out(ctx.r());
    for (int i = 0; i < ctx.r(); ++i)
        out[ctx.mu[i]] = dual_component(ctx, i, code.components[i]);
    return {ctx.n, std::move(out)};
}

WSets w_sets(const FactorizationContext& ctx, int i) {
    if (ctx.mu[i] != i) throw std::invalid_argument("w_sets: factor is not mu-fixed");
    const F2Poly& fb = ctx.rings[i].fbar();
    const int m = ctx.m(i);
    const F2Poly xm = powmod(F2Poly::x_pow(1), static_cast<unsigned long long>(m), fb);
    const F2Poly z = powmod(F2Poly::x_pow(1), static_cast<unsigned long long>(ctx.n) - 1, fb);
    WSets out;
    // brute force over T and T^2 on the defining condition C_i = D_i; for the
    // F1 family this keeps the fbar-quotient cross term that the plain
    // residue-field equations drop (it vanishes for m = 1)
    for (std::uint64_t ta = 0; ta < ctx.rings[i].t_size(); ++ta) {
        const F2Poly a = project_mod2(ctx.rings[i].t_elem(ta));
        for (std::uint64_t tb = 0; tb < ctx.rings[i].t_size(); ++tb) {
            const F2Poly b = project_mod2(ctx.rings[i].t_elem(tb));
            const IdealSpec s = make_ideal_spec(Family::F1, a, b, m);
            if (dual_component(ctx, i, s) == s) out.w1.emplace_back(a, b);
        }
    }
    for (std::uint64_t t = 0; t < ctx.rings[i].t_size(); ++t) {
        const F2Poly b = project_mod2(ctx.rings[i].t_elem(t));
        if ((b + mod(xm * eval_f2(b, z, fb), fb)).is_zero()) out.w2.push_back(b);
    }
    return out;
}

std::vector<std::vector<IdealSpec>> selfdual_fixed_choices(const FactorizationContext& ctx) {
    std::vector<std::vector<IdealSpec>> out;
    for (int i = 0; i < ctx.lambda; ++i) {
        const WSets w = w_sets(ctx, i);
        std::vector<IdealSpec> ch;
        ch.push_back(make_ideal_spec(Family::F7, {}, {}, ctx.m(i)));
        for (const auto& [a, b] : w.w1) ch.push_back(make_ideal_spec(Family::F1, a, b, ctx.m(i)));
        for (const auto& b : w.w2) ch.push_back(make_ideal_spec(Family::F15, {}, b, ctx.m(i)));
        out.push_back(std::move(ch));
    }
    return out;
}

CodeStream::CodeStream(const FactorizationContext& ctx, Mode mode) : ctx_(&ctx), mode_(mode) {
    if (mode == Mode::All) {
        for (int i = 0; i < ctx.r(); ++i) choices_.push_back(enumerate_ideals(ctx.rings[i]));
    } else {
        choices_ = selfdual_fixed_choices(ctx);
        for (int j = 0; j < ctx.pairs; ++j)
            choices_.push_back(enumerate_ideals(ctx.rings[ctx.lambda + j]));
    }
    idx_.assign(choices_.size(), 0);
    for (const auto& c : choices_)
        if (c.empty()) done_ = true;
}

cpp_int CodeStream::total() const {
    cpp_int t = 1;
    for (const auto& c : choices_) t *= c.size();
    return t;
}

std::optional<NegacyclicCode> CodeStream::next() {
    if (done_) return std::nullopt;
    std::vector<IdealSpec> comps(ctx_->r());
    if (mode_ == Mode::All) {
        for (int i = 0; i < ctx_->r(); ++i) comps[i] = choices_[i][idx_[i]];
    } else {
        for (int i = 0; i < ctx_->lambda; ++i) comps[i] = choices_[i][idx_[i]];
        for (int j = 0; j < ctx_->pairs; ++j) {
            const int i = ctx_->lambda + j;
            const IdealSpec& c = choices_[ctx_->lambda + j][idx_[ctx_->lambda + j]];
            comps[i] = c;
            comps[ctx_->mu[i]] = dual_component(*ctx_, i, c);
        }
    }
    // odometer: last slot varies fastest
    bool advanced = false;
    for (std::size_t s = idx_.size(); s-- > 0;) {
        if (++idx_[s] < choices_[s].size()) {
            advanced = true;
            break;
        }
        idx_[s] = 0;
    }
    if (!advanced) done_ = true;
    return NegacyclicCode{ctx_->n, std::move(comps)};
}

// ------------------------------------------------------------------- RWord

RWord RWord::from_alpha_beta(const Z4Poly& alpha, const Z4Poly& beta, std::size_t len) {
    RWord w;
    w.sym.resize(len);
    for (std::size_t c = 0; c < len; ++c) w.sym[c] = {alpha.coeff(c), beta.coeff(c)};
    return w;
}

Z4Poly RWord::alpha() const {
    std::vector<std::uint8_t> c(sym.size());
    for (std::size_t i = 0; i < sym.size(); ++i) c[i] = sym[i][0];
    return Z4Poly(std::move(c));
}

Z4Poly RWord::beta() const {
    std::vector<std::uint8_t> c(sym.size());
    for (std::size_t i = 0; i < sym.size(); ++i) c[i] = sym[i][1];
    return Z4Poly(std::move(c));
}

RWord negate_variable(const RWord& w) {
    if (w.size() % 2 == 0) throw std::invalid_argument("negate_variable: length must be odd");
    RWord out = w;
    for (std::size_t j = 1; j < out.sym.size(); j += 2) {
        out.sym[j][0] = static_cast<std::uint8_t>((4 - out.sym[j][0]) & 3);
        out.sym[j][1] = static_cast<std::uint8_t>((4 - out.sym[j][1]) & 3);
    }
    return out;
}

bool check_pairing_orthogonal(const RWord& c, const RWord& d) {
    if (c.size() != d.size())
        throw std::invalid_argument("check_pairing_orthogonal: length mismatch");
    if (c.size() == 0 || c.size() % 2 != 0)
        throw std::invalid_argument("check_pairing_orthogonal: length must be even");
    const std::size_t N = c.size();
    // mu(d) = d0 - sum_{j>=1} d_j x^{N-j}
    std::vector<std::uint8_t> da(N, 0), db(N, 0);
    da[0] = d.sym[0][0];
    db[0] = d.sym[0][1];
    for (std::size_t j = 1; j < N; ++j) {
        da[N - j] = static_cast<std::uint8_t>((4 - d.sym[j][0]) & 3);
        db[N - j] = static_cast<std::uint8_t>((4 - d.sym[j][1]) & 3);
    }
    const Z4Poly mda{std::move(da)}, mdb{std::move(db)};
    const Z4Poly ca = c.alpha(), cb = c.beta();
    const Z4Poly pa = mul_negacyclic(ca, mda, N);
    Z4Poly pb = mul_negacyclic(ca, mdb, N) + mul_negacyclic(cb, mda, N);
    pb = pb + reduce_negacyclic(Z4Poly::constant(2) * mul_negacyclic(cb, mdb, N), N);
    return pa.is_zero() && pb.is_zero();
}

std::vector<RWord> code_generator_words(const FactorizationContext& ctx,
                                        const NegacyclicCode& code) {
    const std::size_t N = 2 * static_cast<std::size_t>(ctx.n);
    std::vector<RWord> out;
    for (int i = 0; i < ctx.r(); ++i) {
        for (const auto& g : ideal_generators(code.components[i], ctx.rings[i])) {
            const Z4Poly a = mul_negacyclic(ctx.idempotents[i], g.alpha, N);
            const Z4Poly b = mul_negacyclic(ctx.idempotents[i], g.beta, N);
            out.push_back(RWord::from_alpha_beta(a, b, N));
            // v * gamma = (0, alpha + 2 beta)
            const Z4Poly vb = mul_negacyclic(
                ctx.idempotents[i], g.alpha + Z4Poly::constant(2) * g.beta, N);
            out.push_back(RWord::from_alpha_beta(Z4Poly(), vb, N));
        }
    }
    return out;
}

// ------------------------------------------------------------ Z4 standard form

Z4LinearCode z4_standard_form(std::vector<std::vector<std::uint8_t>> rows, int length) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != length)
            throw std::invalid_argument("z4_standard_form: row length mismatch");
    Z4LinearCode out;
    out.length = length;
    std::vector<std::vector<std::uint8_t>> work = std::move(rows);
    std::vector<std::vector<std::uint8_t>> unit_rows, two_rows;
    std::vector<int> unit_pivots, two_pivots;
    for (int col = 0; col < length; ++col) {
        int sel = -1;
        for (std::size_t ri = 0; ri < work.size(); ++ri)
            if (work[ri][col] % 2 == 1) {
                sel = static_cast<int>(ri);
                break;
            }
        if (sel < 0) continue;
        std::vector<std::uint8_t> piv = work[sel];
        work.erase(work.begin() + sel);
        const std::uint8_t inv = (piv[col] == 1) ? 1 : 3;
        for (auto& x : piv) x = static_cast<std::uint8_t>((x * inv) & 3);
        const auto eliminate = [&](std::vector<std::uint8_t>& r) {
            const std::uint8_t c = r[col];
            if (!c) return;
            for (int k = 0; k < length; ++k)
                r[k] = static_cast<std::uint8_t>((r[k] + (4 - c) * piv[k]) & 3);
        };
        for (auto& r : work) eliminate(r);
        for (auto& r : unit_rows) eliminate(r);
        unit_rows.push_back(std::move(piv));
        unit_pivots.push_back(col);
    }
    for (const auto& r : work)
        for (const auto x : r)
            if (x % 2 == 1) throw std::logic_error("z4_standard_form: odd entry after unit phase");
    for (int col = 0; col < length; ++col) {
        int sel = -1;
        for (std::size_t ri = 0; ri < work.size(); ++ri)
            if (work[ri][col] == 2) {
                sel = static_cast<int>(ri);
                break;
            }
        if (sel < 0) continue;
        std::vector<std::uint8_t> piv = work[sel];
        work.erase(work.begin() + sel);
        for (auto& r : work)
            if (r[col] == 2)
                for (int k = 0; k < length; ++k)
                    r[k] = static_cast<std::uint8_t>((r[k] + (4 - piv[k])) & 3);
        // reduce the even part of unit rows above this pivot
        for (auto& r : unit_rows)
            if (r[col] >= 2)
                for (int k = 0; k < length; ++k)
                    r[k] = static_cast<std::uint8_t>((r[k] + (4 - piv[k])) & 3);
        two_rows.push_back(std::move(piv));
        two_pivots.push_back(col);
    }
    for (const auto& r : work)
        for (const auto x : r)
            if (x) throw std::logic_error("z4_standard_form: dependent residue row left nonzero");
    out.gens4 = std::move(unit_rows);
    out.gens2 = std::move(two_rows);
    out.pivots4 = std::move(unit_pivots);
    out.pivots2 = std::move(two_pivots);
    return out;
}

bool z4_member(const Z4LinearCode& code, const std::vector<std::uint8_t>& word) {
    if (static_cast<int>(word.size()) != code.length)
        throw std::invalid_argument("z4_member: word length mismatch");
    std::vector<std::uint8_t> w = word;
    for (std::size_t i = 0; i < code.gens4.size(); ++i) {
        const std::uint8_t c = w[code.pivots4[i]];
        if (!c) continue;
        for (int k = 0; k < code.length; ++k)
            w[k] = static_cast<std::uint8_t>((w[k] + (4 - c) * code.gens4[i][k]) & 3);
    }
    for (std::size_t i = 0; i < code.gens2.size(); ++i) {
        const std::uint8_t c = w[code.pivots2[i]];
        if (c % 2 == 1) return false;
        if (c == 2)
            for (int k = 0; k < code.length; ++k)
                w[k] = static_cast<std::uint8_t>((w[k] + (4 - code.gens2[i][k])) & 3);
    }
    for (const auto x : w)
        if (x) return false;
    return true;
}

Z4LinearCode to_z4_code(const FactorizationContext& ctx, const NegacyclicCode& code) {
    if (code.n != ctx.n) throw std::invalid_argument("to_z4_code: context mismatch");
    const std::size_t N = 2 * static_cast<std::size_t>(ctx.n);
    std::vector<std::vector<std::uint8_t>> rows;
    const auto negashift = [&](const Z4Poly& p) {
        // x * p mod x^N + 1
        std::vector<std::uint8_t> c(N, 0);
        for (std::size_t k = 0; k < N; ++k) {
            const std::uint8_t v = p.coeff(k);
            if (!v) continue;
            if (k + 1 < N)
                c[k + 1] = v;
            else
                c[0] = static_cast<std::uint8_t>((4 - v) & 3);
        }
        return Z4Poly(std::move(c));
    };
    for (int i = 0; i < ctx.r(); ++i) {
        std::vector<std::pair<Z4Poly, Z4Poly>> seeds;
        for (const auto& g : ideal_generators(code.components[i], ctx.rings[i])) {
            seeds.emplace_back(mul_negacyclic(ctx.idempotents[i], g.alpha, N),
                               mul_negacyclic(ctx.idempotents[i], g.beta, N));
            seeds.emplace_back(Z4Poly(),
                               mul_negacyclic(ctx.idempotents[i],
                                              g.alpha + Z4Poly::constant(2) * g.beta, N));
        }
        for (auto [pa, pb] : seeds) {
            for (std::size_t j = 0; j < N; ++j) {
                std::vector<std::uint8_t> row(2 * N, 0);
                for (std::size_t c = 0; c < N; ++c) {
                    row[2 * c] = pa.coeff(c);
                    row[2 * c + 1] = pb.coeff(c);
                }
                rows.push_back(std::move(row));
                pa = negashift(pa);
                pb = negashift(pb);
            }
        }
    }
    Z4LinearCode z4 = z4_standard_form(std::move(rows), static_cast<int>(2 * N));
    if (z4.size() != code_cardinality(ctx, code))
        throw std::logic_error("to_z4_code: cardinality mismatch after reduction");
    return z4;
}

}  // namespace nega
