#pragma once

#include "floorsum/param_set.hpp"

#include <cstdint>
#include <random>

namespace floorsum {

// Deterministic generators for the invariant sweeps and property tests.
// Distributions are ad hoc (uniformity is irrelevant), determinism from the
// caller-owned engine is what matters.

// Random partition of s into exactly parts positive parts, sorted ascending.
std::vector<std::uint64_t> random_partition(std::mt19937_64& rng, std::uint64_t s,
                                            std::size_t parts);

// Balanced pair with disjoint supports (reduced), sums <= max_sum, side sizes
// <= max_side. Not necessarily primitive.
ParamSet random_balanced_reduced(std::mt19937_64& rng, std::uint64_t max_sum,
                                 std::size_t max_side = 5);

// Unconstrained pair: possibly unbalanced, overlapping, imprimitive. For
// identities that hold for every parameter set.
ParamSet random_any(std::mt19937_64& rng, std::uint64_t max_value = 40,
                    std::size_t max_side = 6);

}  // namespace floorsum
