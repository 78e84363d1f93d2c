#ifndef NEGA_MINWEIGHT_HPP
#define NEGA_MINWEIGHT_HPP

#include <cstdint>

#include "nega/negacode.hpp"

namespace nega {

struct WeightProfile {
    int min_lee = 0;
    int min_euclidean = 0;
    std::uint64_t codewords_scanned = 0;
};

/// Kernel selection for the exhaustive scan. Auto picks the AVX2 variant when
/// it was compiled in, the CPU supports it and the code fits one 64-symbol
/// word; the scalar bit-sliced kernel is the reference implementation.
enum class WeightKernel { Auto, Scalar, Avx2 };

bool avx2_kernel_available();

/// Exact minimum Lee and Euclidean weights over all nonzero codewords,
/// by Gray-order traversal of the generator lattice on two bitplanes
/// (weights from popcounts: w_L = P1 + 2*P2, w_E = P1 + 4*P2 with
/// P1 = |low|, P2 = |high & ~low|). Requires 4^{k1} 2^{k2} <= 2^30.
/// threads <= 0 uses the hardware concurrency. Deterministic result
/// regardless of kernel and thread count.
WeightProfile min_weights(const Z4LinearCode& code, int threads = 0,
                          WeightKernel kernel = WeightKernel::Auto);

/// Independent per-symbol table-walk oracle for small codes (<= 2^24 words).
WeightProfile min_weights_naive(const Z4LinearCode& code);

}  // namespace nega

#endif
