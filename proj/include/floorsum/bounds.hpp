#pragma once

#include "floorsum/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace floorsum {

// The truncation parameter M of the Euler product zeta_M. The bound formulas
// only consume log M and (M-1)^{1/2}, so M beyond machine range is stored in
// log space as base^exponent and never materialized; the useful choices are
// around (K+L)^5, i.e. ~10^25 already for the height-1 bound.
class BigM {
public:
    static BigM from_integer(std::uint64_t m);
    static BigM from_power(std::uint64_t base, const Real& exponent);

    bool exact() const { return exact_; }
    std::uint64_t integer_value() const;  // throws unless exact()
    std::uint64_t base() const { return base_; }
    const Real& exponent() const { return exponent_; }

    const Real& log_value() const { return log_; }  // natural log of M

    // "286" or "112371^4.96215"
    std::string describe() const;

private:
    BigM() = default;
    bool exact_ = false;
    std::uint64_t value_ = 0;
    std::uint64_t base_ = 0;
    Real exponent_ = 0;
    Real log_ = 0;
};

// zeta_M(1) = prod_{p <= M} (1 - 1/p)^{-1}, exact. 2 <= M <= 10^7.
Rational zeta_m_exact(std::uint32_t m);

// |prod_{p <= M} (1 - p^{-s})^{-1}| for s = re + i*im with re >= 1.
// Always lands in [1/zeta_M(1), zeta_M(1)].
Real zeta_m_magnitude(std::uint32_t m, const Real& re, const Real& im);

// Rosser-Schoenfeld form of Mertens' theorem: for M > 285,
//   zeta_M(1) <= e^gamma log M (1 - 1/(2 log^2 M))^{-1}.
// Returns that right side. Throws for M <= 285.
Real mertens_upper(const BigM& m);

enum class BoundMode { sigma, meansq };

// Evaluated lower bound with its pieces, all at 60 digits.
//   mertens_factor : B = e^{-gamma}/log M * (1 - 1/(2 log^2 M))
//   sigma mode     : value = main - error bounds sum_{n>=1} |fhat(n)|^2 from
//                    below, with main = N B^2/(4 pi^2) and
//                    error = N^2/(4 pi^2) (2 (M-1)^{-1/2} B^{-1} + (M-1)^{-1})
//   meansq mode    : value bounds the mean square of f: D^2/4 + 2 * sigma
struct BoundReport {
    BoundMode mode = BoundMode::sigma;
    std::uint64_t n = 0;
    std::int64_t d = 0;
    BigM m = BigM::from_integer(286);
    Real mertens_factor;
    Real main_term;
    Real error_term;
    Real value;
};

BoundReport sigma_lower_bound(std::uint64_t n, const BigM& m);
BoundReport meansq_lower_bound(std::uint64_t n, std::int64_t d, const BigM& m);

// Best M of the form N^alpha, alpha in [2,10], for the sigma bound at length
// N. Golden-section refinement to |delta alpha| < 1e-5 after a coarse scan
// that checks unimodality (grid argmax fallback otherwise). Never worse than
// the alpha = 4 default.
struct OptimizeResult {
    BigM m = BigM::from_integer(286);
    Real alpha;
    Real value;
};

OptimizeResult optimize_m(std::uint64_t n);

enum class ThresholdMode { paper, strict };

// Maximal admissible value of the sigma-mode quantity for a nonnegative
// (height D) or bounded (|f| <= A) step function.
//   nonneg       paper: D^2/4     strict: D^2/8
//   bounded(A)   paper: A^2       strict: (A^2 - D^2/4)/2
// Paper mode reproduces the printed comparisons of the source material;
// strict mode is what Parseval forces (an exactly attained example:
// a={2}, b={1,1} has sum_{n>=1} |fhat(n)|^2 = 1/8 = D^2/8).
Rational threshold(std::int64_t d, ThresholdMode mode,
                   std::optional<std::int64_t> bounded_a = std::nullopt);

// Smallest N whose optimized sigma bound exceeds the threshold; every
// parameter set of height D (resp. bound A) must then have length < N.
// Doubling bracket, bisection with the bracket's alpha frozen (the bound is
// increasing in N for fixed alpha near the crossing), then re-verified with
// the full optimizer.
struct LengthBound {
    std::uint64_t n_star = 0;
    Real alpha;
    Real value;  // optimized sigma value at n_star
};

LengthBound min_length_bound(std::int64_t d, ThresholdMode mode,
                             std::optional<std::int64_t> bounded_a = std::nullopt);

}  // namespace floorsum
