// AVX2 variant of the minimum-weight scan: four subcube walks in lockstep,
// one codeword per 64-bit lane. The low-digit Gray sequence is identical
// across subcubes, so each step adds the same broadcast row to all lanes;
// per-lane popcounts come from the pshufb nibble table + psadbw reduction.
#ifdef NEGA_AVX2_KERNEL

#include <immintrin.h>

#include <algorithm>

#include "minweight_detail.hpp"

namespace nega::detail {

namespace {

inline __m256i popcount_per_u64(__m256i x) {
    const __m256i lut =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                         2, 2, 3, 2, 3, 3, 4);
    const __m256i mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(x, mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), mask);
    const __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

ScanResult scan_avx2(const ScanTask& t, std::size_t b0, std::size_t b1) {
    ScanResult res;
    const __m256i zero = _mm256_setzero_si256();
    for (std::size_t g = b0; g < b1; g += 4) {
        // lanes beyond the tail repeat the first base; min is idempotent
        std::uint64_t lo4[4], hi4[4];
        for (int l = 0; l < 4; ++l) {
            const std::size_t idx = g + l < b1 ? g + l : b0;
            lo4[l] = t.bases[idx].lo[0];
            hi4[l] = t.bases[idx].hi[0];
        }
        __m256i LO = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo4));
        __m256i HI = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi4));
        __m256i minL = _mm256_set1_epi64x(1 << 30);
        __m256i minE = _mm256_set1_epi64x(1 << 30);

        const auto update = [&] {
            const __m256i p1 = popcount_per_u64(LO);
            const __m256i p2 = popcount_per_u64(_mm256_andnot_si256(LO, HI));
            const __m256i lee = _mm256_add_epi64(p1, _mm256_slli_epi64(p2, 1));
            const __m256i euc = _mm256_add_epi64(p1, _mm256_slli_epi64(p2, 2));
            const __m256i nonzero = _mm256_cmpgt_epi64(lee, zero);
            const __m256i lessL =
                _mm256_and_si256(_mm256_cmpgt_epi64(minL, lee), nonzero);
            const __m256i lessE =
                _mm256_and_si256(_mm256_cmpgt_epi64(minE, euc), nonzero);
            minL = _mm256_blendv_epi8(minL, lee, lessL);
            minE = _mm256_blendv_epi8(minE, euc, lessE);
        };

        update();
        GrayWalk walk(t.radix);
        bool up;
        int d;
        while ((d = walk.step(up)) >= 0) {
            const Planes& r = up ? t.add_rows[d] : t.sub_rows[d];
            const __m256i rlo = _mm256_set1_epi64x(static_cast<long long>(r.lo[0]));
            const __m256i rhi = _mm256_set1_epi64x(static_cast<long long>(r.hi[0]));
            const __m256i carry = _mm256_and_si256(LO, rlo);
            LO = _mm256_xor_si256(LO, rlo);
            HI = _mm256_xor_si256(HI, _mm256_xor_si256(rhi, carry));
            update();
        }

        alignas(32) std::int64_t outL[4], outE[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(outL), minL);
        _mm256_store_si256(reinterpret_cast<__m256i*>(outE), minE);
        for (int l = 0; l < 4; ++l) {
            res.min_lee = std::min(res.min_lee, static_cast<int>(outL[l]));
            res.min_euc = std::min(res.min_euc, static_cast<int>(outE[l]));
        }
    }
    return res;
}

}  // namespace nega::detail

#endif  // NEGA_AVX2_KERNEL
