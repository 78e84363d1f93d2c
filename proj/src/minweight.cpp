#include "nega/minweight.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <thread>

#include "minweight_detail.hpp"

namespace nega {

namespace detail {

namespace {

template <int NW>
inline void add_planes(Planes& w, const Planes& r) {
    for (int k = 0; k < NW; ++k) {
        const std::uint64_t carry = w.lo[k] & r.lo[k];
        w.lo[k] ^= r.lo[k];
        w.hi[k] ^= r.hi[k] ^ carry;
    }
}

template <int NW>
inline void weigh(const Planes& w, int& lee, int& euc) {
    int p1 = 0, p2 = 0;
    for (int k = 0; k < NW; ++k) {
        p1 += std::popcount(w.lo[k]);
        p2 += std::popcount(w.hi[k] & ~w.lo[k]);
    }
    lee = p1 + 2 * p2;
    euc = p1 + 4 * p2;
}

template <int NW>
ScanResult scan_scalar_impl(const ScanTask& t, std::size_t b0, std::size_t b1) {
    ScanResult res;
    int lee, euc;
    for (std::size_t b = b0; b < b1; ++b) {
        Planes w = t.bases[b];
        GrayWalk walk(t.radix);
        weigh<NW>(w, lee, euc);
        if (lee) {
            res.min_lee = std::min(res.min_lee, lee);
            res.min_euc = std::min(res.min_euc, euc);
        }
        bool up;
        int d;
        while ((d = walk.step(up)) >= 0) {
            add_planes<NW>(w, up ? t.add_rows[d] : t.sub_rows[d]);
            weigh<NW>(w, lee, euc);
            if (lee) {
                res.min_lee = std::min(res.min_lee, lee);
                res.min_euc = std::min(res.min_euc, euc);
            }
        }
    }
    return res;
}

}  // namespace

ScanResult scan_scalar(const ScanTask& t, std::size_t b0, std::size_t b1) {
    switch (t.nwords) {
        case 1: return scan_scalar_impl<1>(t, b0, b1);
        case 2: return scan_scalar_impl<2>(t, b0, b1);
        case 4: return scan_scalar_impl<4>(t, b0, b1);
        case 8: return scan_scalar_impl<8>(t, b0, b1);
        default: throw std::logic_error("scan_scalar: unsupported word count");
    }
}

}  // namespace detail

bool avx2_kernel_available() {
#if defined(NEGA_AVX2_KERNEL) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

detail::Planes to_planes(const std::vector<std::uint8_t>& row) {
    detail::Planes p;
    for (std::size_t c = 0; c < row.size(); ++c) {
        const std::uint64_t lo = row[c] & 1, hi = (row[c] >> 1) & 1;
        p.lo[c / 64] |= lo << (c % 64);
        p.hi[c / 64] |= hi << (c % 64);
    }
    return p;
}

std::vector<std::uint8_t> negate_row(const std::vector<std::uint8_t>& row) {
    std::vector<std::uint8_t> out(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) out[c] = static_cast<std::uint8_t>((4 - row[c]) & 3);
    return out;
}

}  // namespace

WeightProfile min_weights(const Z4LinearCode& code, int threads, WeightKernel kernel) {
    const int k1 = code.k1(), k2 = code.k2();
    const int logsize = 2 * k1 + k2;
    if (logsize > 30)
        throw std::invalid_argument("min_weights: 4^k1 2^k2 exceeds the 2^30 enumeration bound");
    if (code.length > 64 * detail::kMaxWords)
        throw std::invalid_argument("min_weights: length exceeds " +
                                    std::to_string(64 * detail::kMaxWords) + " symbols");
    const std::uint64_t total = std::uint64_t(1) << logsize;
    if (k1 + k2 == 0) return {0, 0, 1};

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    // digits: order-4 generators first, then order-2 generators
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<int> radix;
    for (const auto& r : code.gens4) {
        rows.push_back(r);
        radix.push_back(4);
    }
    for (const auto& r : code.gens2) {
        rows.push_back(r);
        radix.push_back(2);
    }
    const int nd = static_cast<int>(rows.size());
    int nwords = 1;
    while (nwords * 64 < code.length) nwords *= 2;

    // split off top digits as subcube selectors; keep >= 4096 words per subcube
    std::uint64_t lowprod = total, subcubes = 1;
    int split = nd;
    const std::uint64_t target = std::max<std::uint64_t>(4u * static_cast<unsigned>(threads), 8);
    while (split > 0 && subcubes < target &&
           lowprod / static_cast<unsigned>(radix[split - 1]) >= 4096) {
        --split;
        subcubes *= static_cast<unsigned>(radix[split]);
        lowprod /= static_cast<unsigned>(radix[split]);
    }

    detail::ScanTask task;
    task.nwords = nwords;
    task.radix.assign(radix.begin(), radix.begin() + split);
    for (int d = 0; d < split; ++d) {
        task.add_rows.push_back(to_planes(rows[d]));
        task.sub_rows.push_back(to_planes(negate_row(rows[d])));
    }
    task.bases.reserve(subcubes);
    for (std::uint64_t s = 0; s < subcubes; ++s) {
        detail::Planes base;
        std::uint64_t v = s;
        for (int d = split; d < nd; ++d) {
            const int digit = static_cast<int>(v % static_cast<unsigned>(radix[d]));
            v /= static_cast<unsigned>(radix[d]);
            const detail::Planes rp = to_planes(rows[d]);
            for (int rep = 0; rep < digit; ++rep) {
                switch (nwords) {
                    case 1: detail::add_planes<1>(base, rp); break;
                    case 2: detail::add_planes<2>(base, rp); break;
                    case 4: detail::add_planes<4>(base, rp); break;
                    default: detail::add_planes<8>(base, rp); break;
                }
            }
        }
        task.bases.push_back(base);
    }

    bool use_avx2;
    switch (kernel) {
        case WeightKernel::Scalar: use_avx2 = false; break;
        case WeightKernel::Avx2:
            if (!avx2_kernel_available())
                throw std::invalid_argument("min_weights: AVX2 kernel not available");
            if (nwords != 1)
                throw std::invalid_argument("min_weights: AVX2 kernel requires <= 64 symbols");
            use_avx2 = true;
            break;
        case WeightKernel::Auto:
        default: use_avx2 = avx2_kernel_available() && nwords == 1 && task.bases.size() >= 4; break;
    }

    const auto run = [&](std::size_t b0, std::size_t b1) -> detail::ScanResult {
#ifdef NEGA_AVX2_KERNEL
        if (use_avx2) return detail::scan_avx2(task, b0, b1);
#endif
        (void)use_avx2;
        return detail::scan_scalar(task, b0, b1);
    };

    detail::ScanResult agg;
    const std::size_t nb = task.bases.size();
    const int nt = std::min<int>(threads, static_cast<int>(nb));
    if (nt <= 1) {
        agg = run(0, nb);
    } else {
        std::vector<detail::ScanResult> results(nt);
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) {
            const std::size_t b0 = nb * t / nt, b1 = nb * (t + 1) / nt;
            pool.emplace_back([&, t, b0, b1] { results[t] = run(b0, b1); });
        }
        for (auto& th : pool) th.join();
        for (const auto& r : results) {
            agg.min_lee = std::min(agg.min_lee, r.min_lee);
            agg.min_euc = std::min(agg.min_euc, r.min_euc);
        }
    }
    return {agg.min_lee, agg.min_euc, total};
}

WeightProfile min_weights_naive(const Z4LinearCode& code) {
    const int k1 = code.k1(), k2 = code.k2();
    if (2 * k1 + k2 > 24)
        throw std::invalid_argument("min_weights_naive: too large for the oracle");
    if (k1 + k2 == 0) return {0, 0, 1};
    static constexpr int kLee[4] = {0, 1, 2, 1};
    static constexpr int kEuc[4] = {0, 1, 4, 1};
    std::vector<std::uint8_t> word(code.length, 0);
    WeightProfile out{1 << 30, 1 << 30, 0};
    std::uint64_t scanned = 0;
    const auto eval = [&] {
        int lee = 0, euc = 0;
        for (const auto c : word) {
            lee += kLee[c];
            euc += kEuc[c];
        }
        if (lee) {
            out.min_lee = std::min(out.min_lee, lee);
            out.min_euclidean = std::min(out.min_euclidean, euc);
        }
        ++scanned;
    };
    const auto add_row = [&](const std::vector<std::uint8_t>& r) {
        for (int c = 0; c < code.length; ++c)
            word[c] = static_cast<std::uint8_t>((word[c] + r[c]) & 3);
    };
    const std::function<void(int)> rec = [&](int d) {
        if (d == k1 + k2) {
            eval();
            return;
        }
        const auto& r = d < k1 ? code.gens4[d] : code.gens2[d - k1];
        const int radix = d < k1 ? 4 : 2;
        // a full radix cycle of additions returns the word to its prior state
        // (order-2 rows have {0,2} entries, so two additions cancel)
        for (int v = 0; v < radix; ++v) {
            rec(d + 1);
            add_row(r);
        }
    };
    rec(0);
    out.codewords_scanned = scanned;
    return out;
}

}  // namespace nega
