#include "ramseylab/kernels/maskscan.hpp"

namespace ramseylab::kernels {

namespace {

using FindFn = std::size_t (*)(const std::uint64_t*, std::size_t, std::uint64_t);
using Find2Fn = std::size_t (*)(const std::uint64_t*, std::size_t, std::uint64_t, std::uint64_t);

#if defined(RAMSEYLAB_HAVE_AVX2_BUILD)
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
#endif

struct Backend {
    FindFn find_first_subset;
    FindFn count_subsets;
    FindFn find_first_overlapping;
    Find2Fn find_first_intersection_equal;
    const char* name;
};

Backend select_backend() {
#if defined(RAMSEYLAB_HAVE_AVX2_BUILD)
    if (cpu_has_avx2()) {
        return {detail::find_first_subset_avx2, detail::count_subsets_avx2,
                detail::find_first_overlapping_avx2,
                detail::find_first_intersection_equal_avx2, "avx2"};
    }
#endif
    return {detail::find_first_subset_scalar, detail::count_subsets_scalar,
            detail::find_first_overlapping_scalar,
            detail::find_first_intersection_equal_scalar, "scalar"};
}

const Backend g_backend = select_backend();

}  // namespace

std::size_t find_first_subset(const std::uint64_t* sets, std::size_t n, std::uint64_t mask) {
    return g_backend.find_first_subset(sets, n, mask);
}

std::size_t count_subsets(const std::uint64_t* sets, std::size_t n, std::uint64_t mask) {
    return g_backend.count_subsets(sets, n, mask);
}

std::size_t find_first_overlapping(const std::uint64_t* sets, std::size_t n, std::uint64_t mask) {
    return g_backend.find_first_overlapping(sets, n, mask);
}

std::size_t find_first_intersection_equal(const std::uint64_t* sets, std::size_t n,
                                          std::uint64_t with_mask, std::uint64_t target) {
    return g_backend.find_first_intersection_equal(sets, n, with_mask, target);
}

const char* active_backend() { return g_backend.name; }

}  // namespace ramseylab::kernels
