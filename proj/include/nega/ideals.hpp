#ifndef NEGA_IDEALS_HPP
#define NEGA_IDEALS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nega/length2.hpp"

namespace nega {

/// The fifteen parametric families of ideals of K + vK (v^2 = 2v), in table
/// order:
///   F1  <2(a+bf)+v>      F2  <2vf>          F3  <2(fb+v)>     F4  <f(2a+v)>
///   F5  <1>              F6  <f>            F7  <2>           F8  <2f>
///   F9  <0>              F10 <f,v>          F11 <fb+v,2>      F12 <2a+v,2f>
///   F13 <2,vf>           F14 <2f,2v>        F15 <2b+vf,2f>
/// Parameters a, b range over T (residue-field elements, stored mod 2).
enum class Family : int {
    F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15
};

const char* family_name(Family f);
Family family_from_name(std::string_view s);
bool family_needs_a(Family f);
bool family_needs_b(Family f);

struct IdealSpec {
    Family family = Family::F9;
    std::optional<F2Poly> a, b;

    friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// Validates parameter presence and degrees against the family and T_m.
IdealSpec make_ideal_spec(Family f, std::optional<F2Poly> a, std::optional<F2Poly> b, int m);

/// Table cardinality |C| as a function of the residue degree m.
cpp_int ideal_cardinality(const IdealSpec& spec, int m);

/// Table annihilator; parameter arithmetic is 1+a over F2 where required.
IdealSpec annihilator(const IdealSpec& spec);

/// Element alpha + v*beta of K + vK.
struct RvElem {
    Z4Poly alpha, beta;
    friend bool operator==(const RvElem&, const RvElem&) = default;
};

RvElem rv_add(const ChainRing& K, const RvElem& x, const RvElem& y);
RvElem rv_sub(const ChainRing& K, const RvElem& x, const RvElem& y);
/// (a1+b1 v)(a2+b2 v) = a1 a2 + v(a1 b2 + b1 a2 + 2 b1 b2).
RvElem rv_mul(const ChainRing& K, const RvElem& x, const RvElem& y);

/// The literal generator elements of the family table.
std::vector<RvElem> ideal_generators(const IdealSpec& spec, const ChainRing& K);

/// All 2^{2m} + 5*2^m + 9 ideal specs of K + vK, in deterministic order
/// (F1 with a major and b minor, then F2..F15 with parameters in T order).
std::vector<IdealSpec> enumerate_ideals(const ChainRing& K);

/// sigma^{-1} of the ideal: K-spanning rows in K^2 ((gamma, v*gamma) per
/// generator gamma), used for membership and cardinality via standard forms.
std::vector<KPair> sigma_preimage_rows(const IdealSpec& spec, const ChainRing& K);

bool ideal_contains(const IdealSpec& spec, const ChainRing& K, const RvElem& e);

/// Materialized element set as packed pairs (alpha_idx * |K| + beta_idx).
PairSet materialize_ideal(const IdealSpec& spec, const KTable& tab);

std::string spec_to_string(const IdealSpec& spec);

}  // namespace nega

#endif
