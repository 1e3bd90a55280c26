#pragma once

#include <cstdint>
#include <vector>

namespace floorsum {

// Hard ceiling for exact Euler-product work.
inline constexpr std::uint32_t kSieveLimit = 10'000'000;

// Plain Eratosthenes.
std::vector<std::uint32_t> sieve_primes(std::uint32_t limit);

// Cached, thread-safe accessor; grows the cached sieve as needed.
// Returned reference stays valid for the lifetime of the process.
const std::vector<std::uint32_t>& primes_upto(std::uint32_t limit);

}  // namespace floorsum
