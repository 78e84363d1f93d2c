#ifndef NEGA_NEGACODE_HPP
#define NEGA_NEGACODE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nega/factorbase.hpp"
#include "nega/ideals.hpp"

namespace nega {

/// Negacyclic code over R = Z4 + vZ4 of length 2n in canonical form: one ideal
/// of K_i + vK_i per factor of x^n - 1.
struct NegacyclicCode {
    int n = 0;
    std::vector<IdealSpec> components;

    friend bool operator==(const NegacyclicCode&, const NegacyclicCode&) = default;
};

NegacyclicCode assemble(const FactorizationContext& ctx, std::vector<IdealSpec> components);

cpp_int code_cardinality(const FactorizationContext& ctx, const NegacyclicCode& code);

/// prod_i (2^{2m_i} + 5*2^{m_i} + 9).
cpp_int count_codes(const FactorizationContext& ctx);
cpp_int count_selfdual(const FactorizationContext& ctx);

/// Closed-form counts for n = 2^p - 1 a Mersenne prime:
/// 23*(4^p+5*2^p+9)^{2(2^{p-1}-1)/p} and 3*(4^p+5*2^p+9)^{(2^{p-1}-1)/p}.
cpp_int count_codes_mersenne(int p);
cpp_int count_selfdual_mersenne(int p);

/// Component transform of the dual table: the ideal at factor i determines the
/// dual's ideal at factor mu(i); parameters conjugate through x -> x^{-1} and
/// pick up the x-power twists, all reduced into T_{mu(i)} mod (2, fbar).
IdealSpec dual_component(const FactorizationContext& ctx, int i, const IdealSpec& spec);

NegacyclicCode dual(const FactorizationContext& ctx, const NegacyclicCode& code);

/// Residue-field solution sets of the self-duality conditions at a mu-fixed
/// factor: W1 = {(a,b): a + a(x^{-1}) + 1 = 0, b + x^{2n-m} b(x^{-1}) = 0} and
/// W2 = {b: b + x^m b(x^{-1}) = 0}, computed by brute force over T.
struct WSets {
    std::vector<std::pair<F2Poly, F2Poly>> w1;
    std::vector<F2Poly> w2;
};
WSets w_sets(const FactorizationContext& ctx, int i);

/// Per-factor choice lists whose product is the full (or self-dual) code set.
/// Self-dual order: mu-fixed factors list <2>, then F1 over W1, then F15 over
/// W2; paired factors list every ideal with the partner component implied.
std::vector<std::vector<IdealSpec>> selfdual_fixed_choices(const FactorizationContext& ctx);

/// Lazy streams over the full code space and the self-dual subspace.
class CodeStream {
   public:
    enum class Mode { All, SelfDual };
    CodeStream(const FactorizationContext& ctx, Mode mode);

    cpp_int total() const;
    std::optional<NegacyclicCode> next();

   private:
    const FactorizationContext* ctx_;
    Mode mode_;
    std::vector<std::vector<IdealSpec>> choices_;  // per odometer slot
    std::vector<std::size_t> idx_;
    bool done_ = false;
};

/// Word over R: per-symbol pairs (a, b) meaning a + bv.
struct RWord {
    std::vector<std::array<std::uint8_t, 2>> sym;

    static RWord from_alpha_beta(const Z4Poly& alpha, const Z4Poly& beta, std::size_t len);
    Z4Poly alpha() const;
    Z4Poly beta() const;
    std::size_t size() const noexcept { return sym.size(); }

    friend bool operator==(const RWord&, const RWord&) = default;
};

/// Coefficient j multiplied by (-1)^j (the odd-length cyclic/negacyclic bridge).
RWord negate_variable(const RWord& w);

/// True when c(x) * d(x^{-1}) = 0 in R[x]/<x^N+1>; implies [c', d'] = 0 for all
/// negacyclic shifts c', d'. Requires equal even lengths.
bool check_pairing_orthogonal(const RWord& c, const RWord& d);

/// The words eps_i * gamma for every table generator gamma of every component
/// (a Z4-spanning set of the code together with their v-multiples and shifts).
std::vector<RWord> code_generator_words(const FactorizationContext& ctx,
                                        const NegacyclicCode& code);

/// Z4-linear code in standard form: k1 rows with unit pivots, k2 rows with
/// order-2 pivots (entries in {0,2}).
struct Z4LinearCode {
    int length = 0;
    std::vector<std::vector<std::uint8_t>> gens4, gens2;
    std::vector<int> pivots4, pivots2;

    int k1() const noexcept { return static_cast<int>(gens4.size()); }
    int k2() const noexcept { return static_cast<int>(gens2.size()); }
    cpp_int size() const { return cpp_int(1) << (2 * k1() + k2()); }
};

Z4LinearCode z4_standard_form(std::vector<std::vector<std::uint8_t>> rows, int length);
bool z4_member(const Z4LinearCode& code, const std::vector<std::uint8_t>& word);

/// Flattens C to a Z4-linear code of length 4n via (a+bv) -> (a,b) per symbol,
/// reduces to standard form, and cross-checks 4^{k1} 2^{k2} = prod |C_i|.
Z4LinearCode to_z4_code(const FactorizationContext& ctx, const NegacyclicCode& code);

}  // namespace nega

#endif
