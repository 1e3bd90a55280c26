#include "floorsum/bounds.hpp"

#include "floorsum/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace floorsum {

namespace {

const Real& log_285() {
    static const Real v = log(Real(285));
    return v;
}

void require_above_285(const BigM& m) {
    if (m.log_value() <= log_285())
        throw std::domain_error("bound formulas require M > 285 (Mertens hypothesis range)");
}

// B = e^{-gamma}/log M * (1 - 1/(2 log^2 M)); mertens_upper is 1/B.
Real mertens_bracket(const Real& log_m) {
    return exp(-euler_gamma()) / log_m * (1 - 1 / (2 * log_m * log_m));
}

}  // namespace

BigM BigM::from_integer(std::uint64_t m) {
    if (m < 2) throw std::domain_error("BigM: M must be >= 2");
    BigM out;
    out.exact_ = true;
    out.value_ = m;
    out.base_ = m;
    out.exponent_ = 1;
    out.log_ = log(Real(m));
    return out;
}

BigM BigM::from_power(std::uint64_t base, const Real& exponent) {
    if (base < 2) throw std::domain_error("BigM: base must be >= 2");
    if (exponent <= 0) throw std::domain_error("BigM: exponent must be positive");
    BigM out;
    out.exact_ = false;
    out.base_ = base;
    out.exponent_ = exponent;
    out.log_ = exponent * log(Real(base));
    return out;
}

std::uint64_t BigM::integer_value() const {
    if (!exact_) throw std::logic_error("BigM: value stored in log space only");
    return value_;
}

std::string BigM::describe() const {
    if (exact_) return std::to_string(value_);
    return std::to_string(base_) + "^" + real_str(exponent_);
}

Rational zeta_m_exact(std::uint32_t m) {
    if (m < 2 || m > kSieveLimit)
        throw std::domain_error("zeta_m_exact: M must lie in [2, 10^7]");
    Rational r = 1;
    for (std::uint32_t p : primes_upto(m)) {
        if (p > m) break;
        r *= Rational(p, p - 1);
    }
    return r;
}

Real zeta_m_magnitude(std::uint32_t m, const Real& re, const Real& im) {
    if (m < 2 || m > kSieveLimit)
        throw std::domain_error("zeta_m_magnitude: M must lie in [2, 10^7]");
    if (re < 1)
        throw std::domain_error("zeta_m_magnitude: Re(s) must be >= 1");
    // |1 - p^{-s}|^2 = 1 - 2 p^{-re} cos(im log p) + p^{-2 re}
    Real log_sq_sum = 0;
    for (std::uint32_t p : primes_upto(m)) {
        if (p > m) break;
        const Real lp = log(Real(p));
        const Real ps = exp(-re * lp);
        const Real factor_sq = 1 - 2 * ps * cos(im * lp) + ps * ps;
        log_sq_sum += log(factor_sq);
    }
    return exp(-log_sq_sum / 2);
}

Real mertens_upper(const BigM& m) {
    require_above_285(m);
    return 1 / mertens_bracket(m.log_value());
}

BoundReport sigma_lower_bound(std::uint64_t n, const BigM& m) {
    if (n < 2) throw std::domain_error("sigma_lower_bound: N must be >= 2");
    require_above_285(m);

    const Real log_m = m.log_value();
    const Real b = mertens_bracket(log_m);

    // (M-1)^{1/2} and 1/(M-1) entirely from log M: with u = 1/M,
    // (M-1)^{1/2} = e^{log M / 2} sqrt(1-u) and 1/(M-1) = u/(1-u).
    const Real u = exp(-log_m);
    const Real sqrt_m_minus_1 = exp(log_m / 2) * sqrt(1 - u);
    const Real inv_m_minus_1 = u / (1 - u);

    BoundReport rep;
    rep.mode = BoundMode::sigma;
    rep.n = n;
    rep.d = 0;
    rep.m = m;
    rep.mertens_factor = b;
    rep.main_term = Real(n) / four_pi_squared() * b * b;
    rep.error_term = Real(n) * Real(n) / four_pi_squared() *
                     (2 / (sqrt_m_minus_1 * b) + inv_m_minus_1);
    rep.value = rep.main_term - rep.error_term;
    return rep;
}

BoundReport meansq_lower_bound(std::uint64_t n, std::int64_t d, const BigM& m) {
    if (d < 0) throw std::domain_error("meansq_lower_bound: D must be >= 0");
    BoundReport rep = sigma_lower_bound(n, m);
    rep.mode = BoundMode::meansq;
    rep.d = d;
    const Real d_sq_over_4 = Real(d) * Real(d) / 4;
    rep.main_term = d_sq_over_4 + 2 * rep.main_term;
    rep.error_term = 2 * rep.error_term;
    rep.value = rep.main_term - rep.error_term;
    return rep;
}

namespace {

// Value of the sigma bound at M = n^alpha; alphas that leave M <= 285 are
// outside the formula's hypothesis and score as unusable.
Real sigma_value_at_alpha(std::uint64_t n, const Real& alpha) {
    if (alpha * log(Real(n)) <= log_285()) return Real("-1e100");
    return sigma_lower_bound(n, BigM::from_power(n, alpha)).value;
}

// Maximize over [lo, hi] by golden section; returns the best evaluated point.
std::pair<Real, Real> golden_max(std::uint64_t n, Real lo, Real hi, const Real& tol) {
    static const Real gr = (sqrt(Real(5)) - 1) / 2;
    Real c = hi - gr * (hi - lo);
    Real d = lo + gr * (hi - lo);
    Real fc = sigma_value_at_alpha(n, c);
    Real fd = sigma_value_at_alpha(n, d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo);
            fc = sigma_value_at_alpha(n, c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo);
            fd = sigma_value_at_alpha(n, d);
        }
    }
    return fc > fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace

OptimizeResult optimize_m(std::uint64_t n) {
    if (n < 3) throw std::domain_error("optimize_m: N must be >= 3");

    constexpr double kAlphaLo = 2.0, kAlphaHi = 10.0, kCoarseStep = 0.1;
    const Real tol("1e-5");

    // coarse scan, checking the single-peak shape it relies on
    std::vector<Real> grid_val;
    std::size_t steps = static_cast<std::size_t>((kAlphaHi - kAlphaLo) / kCoarseStep) + 1;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < steps; ++i) {
        Real a = Real(kAlphaLo) + Real(kCoarseStep) * i;
        grid_val.push_back(sigma_value_at_alpha(n, a));
        if (grid_val[i] > grid_val[best_i]) best_i = i;
    }
    bool unimodal = true;
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        bool rising = grid_val[i] < grid_val[i + 1];
        if ((i < best_i) != rising && grid_val[i] != grid_val[i + 1]) { unimodal = false; break; }
    }

    Real best_alpha, best_value;
    const Real lo = Real(kAlphaLo) + Real(kCoarseStep) * (best_i == 0 ? 0 : best_i - 1);
    const Real hi = Real(kAlphaLo) + Real(kCoarseStep) * std::min(best_i + 1, steps - 1);
    if (unimodal && hi > lo) {
        std::tie(best_alpha, best_value) = golden_max(n, lo, hi, tol);
    } else {
        // fine grid argmax around the coarse winner
        best_alpha = Real(kAlphaLo) + Real(kCoarseStep) * best_i;
        best_value = grid_val[best_i];
        for (Real a = lo; a <= hi; a += tol) {
            Real v = sigma_value_at_alpha(n, a);
            if (v > best_value) { best_value = v; best_alpha = a; }
        }
    }

    // the alpha = 4 default is the floor
    Real v4 = sigma_value_at_alpha(n, Real(4));
    if (v4 > best_value) { best_value = v4; best_alpha = 4; }

    OptimizeResult out;
    out.alpha = best_alpha;
    out.m = BigM::from_power(n, best_alpha);
    out.value = best_value;
    return out;
}

Rational threshold(std::int64_t d, ThresholdMode mode,
                   std::optional<std::int64_t> bounded_a) {
    if (bounded_a) {
        const std::int64_t a = *bounded_a;
        if (d < 0 || a < 1 || 2 * a < d)
            throw std::domain_error("threshold: bounded variant needs A >= 1 and A >= D/2");
        Int a2 = Int(a) * a;
        if (mode == ThresholdMode::paper) return Rational(a2);
        return Rational(4 * a2 - Int(d) * d, 8);  // (A^2 - D^2/4)/2
    }
    if (d < 1) throw std::domain_error("threshold: nonnegativity variant needs D >= 1");
    Int d2 = Int(d) * d;
    return mode == ThresholdMode::paper ? Rational(d2, 4) : Rational(d2, 8);
}

LengthBound min_length_bound(std::int64_t d, ThresholdMode mode,
                             std::optional<std::int64_t> bounded_a) {
    const Real thr(threshold(d, mode, bounded_a));

    // doubling bracket on the optimized value
    std::uint64_t hi = 4;
    OptimizeResult at_hi = optimize_m(hi);
    while (at_hi.value <= thr) {
        if (hi > (std::uint64_t(1) << 40))
            throw std::runtime_error("min_length_bound: no crossing found");
        hi *= 2;
        at_hi = optimize_m(hi);
    }
    std::uint64_t lo = hi / 2;  // optimized value at lo (if any) was <= thr

    // bisect with the bracket's alpha frozen; the frozen value never exceeds
    // the optimized one, so the crossing found here cannot undershoot
    const Real frozen_alpha = at_hi.alpha;
    while (lo + 1 < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (sigma_value_at_alpha(mid, frozen_alpha) > thr) hi = mid;
        else lo = mid;
    }

    // re-verify with the full optimizer and walk to the true minimum
    std::uint64_t n_star = hi;
    OptimizeResult best = optimize_m(n_star);
    while (best.value <= thr) {  // unreachable while frozen <= optimized holds
        ++n_star;
        best = optimize_m(n_star);
    }
    while (n_star > 3) {
        OptimizeResult below = optimize_m(n_star - 1);
        if (below.value <= thr) break;
        --n_star;
        best = below;
    }

    LengthBound out;
    out.n_star = n_star;
    out.alpha = best.alpha;
    out.value = best.value;
    return out;
}

}  // namespace floorsum
