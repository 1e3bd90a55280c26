#pragma once

#include <cstdint>
#include <string>

namespace floorsum {

// Named invariant sweeps, shared by the `verify` subcommand and the
// acceptance suite. On failure, `detail` holds a minimal counterexample.
struct SweepResult {
    bool pass = true;
    std::uint64_t cases = 0;
    std::string detail;
};

// zeta_M(1) <= e^gamma log M (1 - 1/(2 log^2 M))^{-1} for every integer M in
// (285, m_max], with zeta_M(1) exact.
SweepResult sweep_mertens(std::uint32_t m_max = 100'000);

// Random (M <= 10^4, s with Re s >= 1, |Im s| <= 10^3):
// 1/zeta_M(1) - 1e-9 <= |zeta_M(s)| <= zeta_M(1) + 1e-9.
SweepResult sweep_zetam(std::uint64_t cases = 1000, std::uint64_t seed = 1);

// Random balanced reduced sets, sums <= 40:
// 0 <= (mean_square - D^2/4)/2 - partial <= tail_bound at N = n_terms,
// plus the a={2}, b={1,1} partial approaching 1/8 from below.
SweepResult sweep_parseval(std::uint64_t cases = 50, std::uint64_t seed = 1,
                           std::uint64_t n_terms = 10'000);

// Random sets (unbalanced and unreduced included):
// c_n == sum_{d|n} d g(d) exactly for all n <= n_max.
SweepResult sweep_convolution(std::uint64_t cases = 500, std::uint64_t seed = 1,
                              std::uint64_t n_max = 10'000);

// Random balanced (P, x) with no a_k x or b_l x integral:
// f(x) + f(-x) == L - K exactly.
SweepResult sweep_reflection(std::uint64_t cases = 100'000, std::uint64_t seed = 1);

}  // namespace floorsum
