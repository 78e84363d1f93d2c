#ifndef NEGA_Z4POLY_HPP
#define NEGA_Z4POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nega {

/// Dense polynomial over Z4, stored as ascending coefficients in {0,1,2,3}.
/// Canonical form has no trailing zeros; the zero polynomial is the empty
/// coefficient sequence (degree() == -1).
class Z4Poly {
   public:
    Z4Poly() = default;
    explicit Z4Poly(std::vector<std::uint8_t> coeffs);

    static Z4Poly constant(int c);
    static Z4Poly x_pow(std::size_t j, int c = 1);
    /// Parses the textual format "3 1 2 1" (ascending coefficients).
    static Z4Poly from_string(std::string_view s);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::uint8_t coeff(std::size_t j) const noexcept { return j < c_.size() ? c_[j] : 0; }
    const std::vector<std::uint8_t>& coeffs() const noexcept { return c_; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    std::string to_string() const;

    friend bool operator==(const Z4Poly&, const Z4Poly&) = default;

   private:
    std::vector<std::uint8_t> c_;
};

Z4Poly operator+(const Z4Poly& p, const Z4Poly& q);
Z4Poly operator-(const Z4Poly& p, const Z4Poly& q);
Z4Poly operator-(const Z4Poly& p);
Z4Poly operator*(const Z4Poly& p, const Z4Poly& q);

struct Z4DivMod {
    Z4Poly quot, rem;
};

/// Long division by a monic divisor; throws std::invalid_argument otherwise.
Z4DivMod divmod(const Z4Poly& p, const Z4Poly& d);
Z4Poly mul_mod(const Z4Poly& p, const Z4Poly& q, const Z4Poly& modulus);

/// Reduction mod x^N + 1 via the rewrite x^N -> -1.
Z4Poly reduce_negacyclic(const Z4Poly& p, std::size_t N);
Z4Poly mul_negacyclic(const Z4Poly& p, const Z4Poly& q, std::size_t N);

/// p(-x^2): coefficient j moves to position 2j with sign (-1)^j.
Z4Poly substitute_neg_x2(const Z4Poly& p);

/// x^{deg p} * p(1/x); throws on the zero polynomial.
Z4Poly reciprocal(const Z4Poly& p);

/// Polynomial over F2, ascending bit coefficients, canonical (no trailing zeros).
class F2Poly {
   public:
    F2Poly() = default;
    explicit F2Poly(std::vector<std::uint8_t> bits);

    static F2Poly one() { return F2Poly({1}); }
    static F2Poly x_pow(std::size_t j);
    static F2Poly from_string(std::string_view s);

    bool is_zero() const noexcept { return b_.empty(); }
    bool is_one() const noexcept { return b_.size() == 1; }
    int degree() const noexcept { return static_cast<int>(b_.size()) - 1; }
    std::uint8_t coeff(std::size_t j) const noexcept { return j < b_.size() ? b_[j] : 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return b_; }

    std::string to_string() const;

    friend bool operator==(const F2Poly&, const F2Poly&) = default;

   private:
    std::vector<std::uint8_t> b_;
};

F2Poly operator+(const F2Poly& p, const F2Poly& q);  // == subtraction over F2
F2Poly operator*(const F2Poly& p, const F2Poly& q);

struct F2DivMod {
    F2Poly quot, rem;
};
F2DivMod divmod(const F2Poly& p, const F2Poly& d);
F2Poly mod(const F2Poly& p, const F2Poly& d);
F2Poly gcd(F2Poly a, F2Poly b);

struct F2Bezout {
    F2Poly g, u, v;  // u*a + v*b = g
};
F2Bezout gcdext(const F2Poly& a, const F2Poly& b);

F2Poly powmod(const F2Poly& base, unsigned long long e, const F2Poly& modulus);

/// Coefficientwise reduction mod 2 (the bar map, a ring homomorphism).
F2Poly project_mod2(const Z4Poly& p);
/// Embeds an F2 polynomial into Z4[x] with coefficients in {0,1}.
Z4Poly lift_to_z4(const F2Poly& p);

bool is_irreducible(const F2Poly& f);

/// Factors a squarefree polynomial over F2 into monic irreducibles
/// (Berlekamp: Frobenius nullspace plus gcd splitting).
std::vector<F2Poly> factor_squarefree_f2(const F2Poly& f);

/// Lifts a coprime factorization target = fbar*gbar (mod 2) to an exact
/// factorization over Z4. target must be monic; the lift is unique.
std::pair<Z4Poly, Z4Poly> hensel_lift_factor(const F2Poly& fbar, const F2Poly& gbar,
                                             const Z4Poly& target);

/// Lifts a mod-2 Bezout identity a2*F + b2*f = 1 to an exact identity over Z4
/// (one Newton step: multiply both cofactors by 2 - (a2*F + b2*f)).
std::pair<Z4Poly, Z4Poly> lift_bezout(const F2Poly& a2, const F2Poly& b2, const Z4Poly& F,
                                      const Z4Poly& f);

}  // namespace nega

#endif
