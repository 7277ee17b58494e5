#pragma once

#include <cstddef>
#include <cstdint>

// Bitmask scan kernels. Copy lists in the search engines are arrays of
// 64-bit edge masks; the hot loops scan them against a query mask. Each
// kernel has a scalar reference implementation and an AVX2 variant; the
// public entry points dispatch once at startup based on CPU support, and
// the variants are equivalence-tested against each other.

namespace ramseylab::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// First i with sets[i] a subset of mask (sets[i] & ~mask == 0), else npos.
std::size_t find_first_subset(const std::uint64_t* sets, std::size_t n, std::uint64_t mask);

/// Number of i with sets[i] a subset of mask.
std::size_t count_subsets(const std::uint64_t* sets, std::size_t n, std::uint64_t mask);

/// First i with sets[i] intersecting mask but not contained in it, else npos.
std::size_t find_first_overlapping(const std::uint64_t* sets, std::size_t n, std::uint64_t mask);

/// First i with (sets[i] & with_mask) == target, else npos.
std::size_t find_first_intersection_equal(const std::uint64_t* sets, std::size_t n,
                                          std::uint64_t with_mask, std::uint64_t target);

/// Name of the selected backend: "avx2" or "scalar".
const char* active_backend();

namespace detail {

std::size_t find_first_subset_scalar(const std::uint64_t*, std::size_t, std::uint64_t);
std::size_t count_subsets_scalar(const std::uint64_t*, std::size_t, std::uint64_t);
std::size_t find_first_overlapping_scalar(const std::uint64_t*, std::size_t, std::uint64_t);
std::size_t find_first_intersection_equal_scalar(const std::uint64_t*, std::size_t,
                                                 std::uint64_t, std::uint64_t);

#if defined(RAMSEYLAB_HAVE_AVX2_BUILD)
std::size_t find_first_subset_avx2(const std::uint64_t*, std::size_t, std::uint64_t);
std::size_t count_subsets_avx2(const std::uint64_t*, std::size_t, std::uint64_t);
std::size_t find_first_overlapping_avx2(const std::uint64_t*, std::size_t, std::uint64_t);
std::size_t find_first_intersection_equal_avx2(const std::uint64_t*, std::size_t,
                                               std::uint64_t, std::uint64_t);
#endif

}  // namespace detail

}  // namespace ramseylab::kernels
