#include "ramseylab/kernels/maskscan.hpp"

#if defined(RAMSEYLAB_HAVE_AVX2_BUILD)

#include <immintrin.h>

namespace ramseylab::kernels::detail {

namespace {
// movemask over the 4 lane-compare results; 0xff per true lane.
inline int lanes_eq_zero(__m256i v) {
    return _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, _mm256_setzero_si256())));
}
}  // namespace

std::size_t find_first_subset_avx2(const std::uint64_t* sets, std::size_t n,
                                   std::uint64_t mask) {
    const __m256i not_mask = _mm256_set1_epi64x(static_cast<long long>(~mask));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
        int hit = lanes_eq_zero(_mm256_and_si256(s, not_mask));
        if (hit) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(hit)));
    }
    for (; i < n; ++i)
        if ((sets[i] & ~mask) == 0) return i;
    return npos;
}

std::size_t count_subsets_avx2(const std::uint64_t* sets, std::size_t n,
                               std::uint64_t mask) {
    const __m256i not_mask = _mm256_set1_epi64x(static_cast<long long>(~mask));
    std::size_t c = 0, i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
        c += static_cast<std::size_t>(
            __builtin_popcount(static_cast<unsigned>(lanes_eq_zero(_mm256_and_si256(s, not_mask)))));
    }
    for (; i < n; ++i) c += (sets[i] & ~mask) == 0;
    return c;
}

std::size_t find_first_overlapping_avx2(const std::uint64_t* sets, std::size_t n,
                                        std::uint64_t mask) {
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
    const __m256i not_m = _mm256_set1_epi64x(static_cast<long long>(~mask));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
        int in_zero = lanes_eq_zero(_mm256_and_si256(s, m));
        int out_zero = lanes_eq_zero(_mm256_and_si256(s, not_m));
        int hit = ~in_zero & ~out_zero & 0xf;
        if (hit) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(hit)));
    }
    for (; i < n; ++i)
        if ((sets[i] & mask) != 0 && (sets[i] & ~mask) != 0) return i;
    return npos;
}

std::size_t find_first_intersection_equal_avx2(const std::uint64_t* sets, std::size_t n,
                                               std::uint64_t with_mask,
                                               std::uint64_t target) {
    const __m256i w = _mm256_set1_epi64x(static_cast<long long>(with_mask));
    const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
        __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(s, w), t);
        int hit = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
        if (hit) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(hit)));
    }
    for (; i < n; ++i)
        if ((sets[i] & with_mask) == target) return i;
    return npos;
}

}  // namespace ramseylab::kernels::detail

#endif  // RAMSEYLAB_HAVE_AVX2_BUILD
