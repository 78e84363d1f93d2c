#ifndef NEGA_MINWEIGHT_DETAIL_HPP
#define NEGA_MINWEIGHT_DETAIL_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace nega::detail {

inline constexpr int kMaxWords = 8;  // up to 512 Z4 symbols

/// Codeword on two bitplanes: symbol s = (hi<<1)|lo per bit position.
/// Z4 addition is lo ^= lo', hi ^= hi' ^ carry with carry = lo & lo'.
struct Planes {
    std::array<std::uint64_t, kMaxWords> lo{}, hi{};
};

/// One scan job: a shared low-digit Gray walk applied to several subcube
/// base words. add_rows[d]/sub_rows[d] are the +1/-1 row deltas of digit d.
struct ScanTask {
    int nwords = 1;
    std::vector<int> radix;
    std::vector<Planes> add_rows, sub_rows;
    std::vector<Planes> bases;
};

struct ScanResult {
    int min_lee = 1 << 30;
    int min_euc = 1 << 30;
};

/// Reflected mixed-radix Gray counter; each step changes one digit by +-1.
class GrayWalk {
   public:
    explicit GrayWalk(const std::vector<int>& radix)
        : radix_(&radix), c_(radix.size(), 0), dir_(radix.size(), 1) {}

    // digit index stepped, or -1 when the space is exhausted; `up` reports
    // the direction taken
    int step(bool& up) {
        for (std::size_t j = 0; j < c_.size(); ++j) {
            const int nd = c_[j] + dir_[j];
            if (nd >= 0 && nd < (*radix_)[j]) {
                c_[j] = nd;
                up = dir_[j] > 0;
                return static_cast<int>(j);
            }
            dir_[j] = -dir_[j];
        }
        return -1;
    }

   private:
    const std::vector<int>* radix_;
    std::vector<int> c_;
    std::vector<int> dir_;
};

ScanResult scan_scalar(const ScanTask& task, std::size_t base_begin, std::size_t base_end);

#ifdef NEGA_AVX2_KERNEL
ScanResult scan_avx2(const ScanTask& task, std::size_t base_begin, std::size_t base_end);
#endif

}  // namespace nega::detail

#endif
