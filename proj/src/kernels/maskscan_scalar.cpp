#include "ramseylab/kernels/maskscan.hpp"

namespace ramseylab::kernels::detail {

std::size_t find_first_subset_scalar(const std::uint64_t* sets, std::size_t n,
                                     std::uint64_t mask) {
    for (std::size_t i = 0; i < n; ++i)
        if ((sets[i] & ~mask) == 0) return i;
    return npos;
}

std::size_t count_subsets_scalar(const std::uint64_t* sets, std::size_t n,
                                 std::uint64_t mask) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += (sets[i] & ~mask) == 0;
    return c;
}

std::size_t find_first_overlapping_scalar(const std::uint64_t* sets, std::size_t n,
                                          std::uint64_t mask) {
    for (std::size_t i = 0; i < n; ++i)
        if ((sets[i] & mask) != 0 && (sets[i] & ~mask) != 0) return i;
    return npos;
}

std::size_t find_first_intersection_equal_scalar(const std::uint64_t* sets, std::size_t n,
                                                 std::uint64_t with_mask,
                                                 std::uint64_t target) {
    for (std::size_t i = 0; i < n; ++i)
        if ((sets[i] & with_mask) == target) return i;
    return npos;
}

}  // namespace ramseylab::kernels::detail
