#pragma once

#include "floorsum/numeric.hpp"
#include "floorsum/param_set.hpp"

#include <cstdint>
#include <vector>

namespace floorsum {

// f(x) = sum floor(a_k x) - sum floor(b_l x), exact for any rational x.
// Works for unbalanced sets too (evaluated literally, no periodic extension).
Int evaluate(const ParamSet& p, const Rational& x);

// The possible jump points of f in (0,1]: { n/v : v in a u b, 1 <= n <= v },
// sorted, deduplicated. Requires a balanced set (the restriction of f to one
// period is only meaningful with period 1).
std::vector<Rational> breakpoints(const ParamSet& p);

// One period of f materialized. f is right-continuous (floors are), so it is
// constant on [c_i, c_{i+1}) and equal there to its value at c_i.
//
//   points : c_1 < c_2 < ... < c_m = 1, the breakpoints in (0,1]
//   values : f on [c_i, c_{i+1}) for i = 1..m-1; f on [0, c_1) is 0 and is
//            not stored
struct StepProfile {
    std::vector<Rational> points;
    std::vector<std::int64_t> values;

    std::int64_t value_min() const;  // over [0,1), includes the leading 0
    std::int64_t value_max() const;

    // integral of f^2 over [0,1), exact
    Rational mean_square() const;
};

StepProfile profile(const ParamSet& p);

struct Extrema {
    std::int64_t min = 0;
    std::int64_t max = 0;
};

// min/max of f over one period. For a nonnegative balanced set the maximum
// is L-K and the minimum 0; more generally the attained values satisfy the
// reflection law V = (L-K) - V.
Extrema extrema(const ParamSet& p);

// Landau's criterion in step-function form: u_n is integral for all n
// exactly when f never goes negative, i.e. when min f = 0.
bool is_nonnegative(const ParamSet& p);

// integral of f^2 over one period, exact.
Rational mean_square(const ParamSet& p);

}  // namespace floorsum
