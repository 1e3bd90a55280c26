#pragma once

#include "floorsum/numeric.hpp"
#include "floorsum/param_set.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace floorsum {

// Multiplicity difference g(n) = #{a_k = n} - #{b_l = n}. Its finite Dirichlet
// series G(s) carries all Fourier data of f: fhat(n) = (1/2 pi i) sum_{d|n} d g(d) / n.
std::int64_t g_of(const ParamSet& p, std::uint64_t n);

// Sparse view of g: value -> multiplicity difference, zero entries omitted.
std::map<std::uint64_t, std::int64_t> multiplicity_function(const ParamSet& p);

// The integer bracket c_n = sum_{a_k | n} a_k - sum_{b_l | n} b_l, so that
// |fhat(n)| = |c_n| / (2 pi n) for n >= 1. Bounded by sum(a) + sum(b).
std::int64_t bracket(const ParamSet& p, std::uint64_t n);

// c_1..c_n_max in one sieve pass (index 0 unused).
std::vector<std::int64_t> bracket_range(const ParamSet& p, std::uint64_t n_max);

// |fhat(n)| = |c_n| / (2 pi n).
Real coeff_magnitude(const ParamSet& p, std::uint64_t n);

// Truncated Parseval data for sum_{n>=1} |fhat(n)|^2:
//   sum        = sum_{n<=N} c_n^2 / n^2, exact
//   partial    = sum / (4 pi^2)
//   tail_bound = (2s)^2 / (4 pi^2 N), an upper bound for the dropped tail
//                (|c_n| <= 2s and sum_{n>N} n^-2 <= 1/N)
// Parseval gives 0 <= (mean_square - D^2/4)/2 - partial <= tail_bound.
struct ParsevalPartial {
    Rational sum;
    Real partial;
    Real tail_bound;
};

ParsevalPartial parseval_partial(const ParamSet& p, std::uint64_t n_terms);

// Coefficientwise form of G(s) zeta(s+1) = 2 pi i F(s): checks
// c_n == sum_{d|n} d g(d) in exact integer arithmetic for all n <= n_max.
// True for every parameter set; a failure is an implementation bug.
bool convolution_identity_check(const ParamSet& p, std::uint64_t n_max);

}  // namespace floorsum
