#pragma once

#include <cstdint>

namespace ramseylab {

// splitmix64: the usual seed-expansion mixer. Used both as a stream generator
// for G(n,p) sampling and to derive independent per-unit seeds, so results
// are reproducible and independent of worker scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives a child seed from a master seed and up to three stream indices.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s = h ^ (a * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    h = splitmix64(s);
    s = h ^ (b * 0xc2b2ae3d27d4eb4fULL + 0x452821e638d01377ULL);
    h = splitmix64(s);
    s = h ^ (c * 0x165667b19e3779f9ULL + 0x13198a2e03707344ULL);
    return splitmix64(s);
}

}  // namespace ramseylab
