#include "floorsum/primes.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace floorsum {

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
    if (limit > kSieveLimit)
        throw std::domain_error("sieve_primes: limit beyond supported range (10^7)");
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

const std::vector<std::uint32_t>& primes_upto(std::uint32_t limit) {
    static std::mutex mu;
    static std::uint32_t cached_limit = 0;
    // Never shrinks; swapped wholesale under the lock. Readers hold the
    // returned reference across calls, so retired sieves are kept alive.
    static std::vector<std::unique_ptr<std::vector<std::uint32_t>>> generations;

    std::lock_guard<std::mutex> lock(mu);
    if (generations.empty() || limit > cached_limit) {
        std::uint32_t grow = std::max(limit, std::uint32_t(1) << 16);
        generations.push_back(
            std::make_unique<std::vector<std::uint32_t>>(sieve_primes(grow)));
        cached_limit = grow;
    }
    return *generations.back();
}

}  // namespace floorsum
