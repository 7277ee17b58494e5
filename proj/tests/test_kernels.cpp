#include <doctest.h>

#include <cstring>
#include <vector>

#include "ramseylab/kernels/maskscan.hpp"
#include "ramseylab/rng.hpp"

using namespace ramseylab;
namespace k = ramseylab::kernels;

namespace {

std::vector<std::uint64_t> random_sets(std::uint64_t& state, std::size_t n, int bits) {
    std::vector<std::uint64_t> sets(n);
    std::uint64_t mask = bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
    for (auto& s : sets) s = splitmix64(state) & mask;
    return sets;
}

}  // namespace

TEST_CASE("mask scan kernels: dispatched backend matches the scalar reference") {
    INFO("active backend: ", k::active_backend());
    std::uint64_t state = 0xfeedULL;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = splitmix64(state) % 40;  // odd sizes exercise the tail loop
        int bits = 1 + static_cast<int>(splitmix64(state) % 64);
        auto sets = random_sets(state, n, bits);
        std::uint64_t mask = splitmix64(state) & ((bits >= 64) ? ~0ULL : ((1ULL << bits) - 1));
        std::uint64_t target = splitmix64(state) & mask;

        CHECK(k::find_first_subset(sets.data(), n, mask) ==
              k::detail::find_first_subset_scalar(sets.data(), n, mask));
        CHECK(k::count_subsets(sets.data(), n, mask) ==
              k::detail::count_subsets_scalar(sets.data(), n, mask));
        CHECK(k::find_first_overlapping(sets.data(), n, mask) ==
              k::detail::find_first_overlapping_scalar(sets.data(), n, mask));
        CHECK(k::find_first_intersection_equal(sets.data(), n, mask, target) ==
              k::detail::find_first_intersection_equal_scalar(sets.data(), n, mask, target));
    }
}

#if defined(RAMSEYLAB_HAVE_AVX2_BUILD)
TEST_CASE("mask scan kernels: avx2 variants agree with scalar when supported") {
    if (!__builtin_cpu_supports("avx2")) return;
    std::uint64_t state = 0xabcdULL;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = splitmix64(state) % 37;
        auto sets = random_sets(state, n, 64);
        std::uint64_t mask = splitmix64(state);
        std::uint64_t target = splitmix64(state) & mask;
        CHECK(k::detail::find_first_subset_avx2(sets.data(), n, mask) ==
              k::detail::find_first_subset_scalar(sets.data(), n, mask));
        CHECK(k::detail::count_subsets_avx2(sets.data(), n, mask) ==
              k::detail::count_subsets_scalar(sets.data(), n, mask));
        CHECK(k::detail::find_first_overlapping_avx2(sets.data(), n, mask) ==
              k::detail::find_first_overlapping_scalar(sets.data(), n, mask));
        CHECK(k::detail::find_first_intersection_equal_avx2(sets.data(), n, mask, target) ==
              k::detail::find_first_intersection_equal_scalar(sets.data(), n, mask, target));
    }
}
#endif

TEST_CASE("mask scan kernels: small hand cases") {
    std::vector<std::uint64_t> sets = {0b0110, 0b0011, 0b1000, 0};
    CHECK(k::find_first_subset(sets.data(), sets.size(), 0b0111) == 0);
    CHECK(k::find_first_subset(sets.data(), sets.size(), 0b1001) == 2);
    CHECK(k::find_first_subset(sets.data(), sets.size(), 0b1111) == 0);
    CHECK(k::find_first_subset(sets.data(), 0, ~0ULL) == k::npos);
    CHECK(k::count_subsets(sets.data(), sets.size(), 0b0111) == 3);  // 0110, 0011, empty
    CHECK(k::find_first_overlapping(sets.data(), sets.size(), 0b0001) == 1);
    CHECK(k::find_first_overlapping(sets.data(), sets.size(), 0b1111) == k::npos);
    CHECK(k::find_first_intersection_equal(sets.data(), sets.size(), 0b0010, 0b0010) == 0);
    CHECK(k::find_first_intersection_equal(sets.data(), sets.size(), 0b0010, 0) == 2);
}
