#pragma once

#include <cstdint>

#include "ramseylab/graph.hpp"

namespace ramseylab {

/// Binomial random graph: each of the C(n,2) pairs is included independently
/// with probability p, driven deterministically by the seed. Identical
/// (n, p, seed) always produces the identical graph.
Graph sample_gnp(int n, double p, std::uint64_t seed);

}  // namespace ramseylab
