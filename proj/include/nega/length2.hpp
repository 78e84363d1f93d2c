#ifndef NEGA_LENGTH2_HPP
#define NEGA_LENGTH2_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nega/chainring.hpp"

namespace nega {

using boost::multiprecision::cpp_int;

/// A length-2 vector over K.
using KPair = std::array<Z4Poly, 2>;

/// Row of a generator matrix in standard form over the chain ring: every entry
/// lies in <f^{pivot_deg}> and the pivot entry is exactly f^{pivot_deg}.
struct KStdRow {
    KPair v;
    int pivot_col = 0;
    int pivot_deg = 0;
};

/// Reduces the K-span of the given rows to standard form (pivots of
/// ascending pi-degree, pivot columns distinct, entries below pivots cleared).
std::vector<KStdRow> k_standard_form(const ChainRing& K, std::vector<KPair> rows);

/// Membership of w in the span described by a standard form.
bool k_span_contains(const ChainRing& K, const std::vector<KStdRow>& sf, const KPair& w);

/// |span| = |T|^{sum_i (4 - pivot_deg_i)} (the standard-form cardinality count).
cpp_int k_span_size(const ChainRing& K, const std::vector<KStdRow>& sf);

/// Indexed arithmetic tables for oracle-scale rings (|K| <= 256, i.e. m <= 2).
class KTable {
   public:
    explicit KTable(const ChainRing& K);

    const ChainRing& ring() const noexcept { return *ring_; }
    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * size_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * size_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t index_of(const Z4Poly& e) const;
    const Z4Poly& elem(std::uint32_t i) const { return elems_[i]; }
    std::uint32_t two() const noexcept { return two_; }

   private:
    const ChainRing* ring_;
    std::uint32_t size_;
    std::vector<Z4Poly> elems_;
    std::vector<std::uint32_t> add_, mul_, neg_;
    std::uint32_t two_;
};

/// Packed element pair (a * |K| + b) of K^2; sets are kept sorted.
using PairSet = std::vector<std::uint32_t>;

/// One linear code of length 2 over K, as enumerated from the nine
/// generator-matrix families.
struct Length2Code {
    std::string family;              // "i" .. "ix"
    std::vector<std::uint32_t> params;
    std::vector<KPair> rows;
    PairSet elems;                   // materialized row span, sorted packed pairs
};

/// Enumerates every linear code of length 2 over K, one per family member;
/// total count is sum_{i=0..4} (2i+1)|T|^{4-i} and all element sets are
/// pairwise distinct (duplicates raise). Requires |K| <= 4096.
std::vector<Length2Code> enumerate_all_length2(const ChainRing& K);

/// Keeps the codes closed under (a,b) -> (0, a + omega*f^2*b).
std::vector<Length2Code> filter_condition2(const ChainRing& K, const KTable& tab,
                                           std::vector<Length2Code> codes, const Z4Poly& omega);

/// Classification against the five standard-form classes of length-2 codes
/// satisfying the closure condition.
struct StandardFormTag {
    char cls = '?';                  // 'I'..'V' encoded as '1'..'5'
    int variant = 0;
    std::vector<std::uint32_t> params;
    std::string to_string() const;
};

StandardFormTag classify_standard_form(const ChainRing& K, const KTable& tab,
                                       const Length2Code& code);

/// The sigma image {alpha + v beta : (alpha,beta) in code}: verifies the set is
/// an ideal of K + vK (closure under multiplication by v) and returns it as the
/// same packed pair set. Requires the code to satisfy the closure condition.
PairSet sigma_to_ideal(const KTable& tab, const Length2Code& code);

}  // namespace nega

#endif
