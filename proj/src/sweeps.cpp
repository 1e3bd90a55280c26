#include "floorsum/sweeps.hpp"

#include "floorsum/bounds.hpp"
#include "floorsum/fourier.hpp"
#include "floorsum/numeric.hpp"
#include "floorsum/param_set.hpp"
#include "floorsum/primes.hpp"
#include "floorsum/sampling.hpp"
#include "floorsum/step_function.hpp"

#include <random>
#include <sstream>

namespace floorsum {

namespace {

std::string describe_set(const ParamSet& p) {
    std::ostringstream os;
    os << "a=[";
    for (std::size_t i = 0; i < p.a().size(); ++i) os << (i ? "," : "") << p.a()[i];
    os << "] b=[";
    for (std::size_t i = 0; i < p.b().size(); ++i) os << (i ? "," : "") << p.b()[i];
    os << "]";
    return os.str();
}

}  // namespace

SweepResult sweep_mertens(std::uint32_t m_max) {
    if (m_max <= 285)
        throw std::domain_error("mertens sweep needs an upper limit above 285");
    SweepResult res;
    const auto& primes = primes_upto(m_max);
    std::size_t pi = 0;
    Rational zeta_m = 1;
    for (std::uint32_t m = 2; m <= m_max; ++m) {
        if (pi < primes.size() && primes[pi] == m) {
            zeta_m *= Rational(m, m - 1);
            ++pi;
        }
        if (m <= 285) continue;
        ++res.cases;
        const Real upper = mertens_upper(BigM::from_integer(m));
        if (!(Real(zeta_m) <= upper)) {
            res.pass = false;
            std::ostringstream os;
            os << "M=" << m << " zeta_M(1)=" << real_str(Real(zeta_m), 20)
               << " > bound=" << real_str(upper, 20);
            res.detail = os.str();
            return res;
        }
    }
    return res;
}

SweepResult sweep_zetam(std::uint64_t cases, std::uint64_t seed) {
    SweepResult res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick_m(2, 10'000);
    std::uniform_real_distribution<double> pick_re(1.0, 4.0);
    std::uniform_real_distribution<double> pick_im(-1000.0, 1000.0);
    const Real slack("1e-9");
    for (std::uint64_t i = 0; i < cases; ++i) {
        const std::uint32_t m = pick_m(rng);
        const Real re(pick_re(rng)), im(pick_im(rng));
        const Real z1(zeta_m_exact(m));
        const Real mag = zeta_m_magnitude(m, re, im);
        ++res.cases;
        if (!(1 / z1 - slack <= mag && mag <= z1 + slack)) {
            res.pass = false;
            std::ostringstream os;
            os << "M=" << m << " s=" << real_str(re) << "+" << real_str(im)
               << "i |zeta_M(s)|=" << real_str(mag, 20) << " outside ["
               << real_str(1 / z1, 20) << ", " << real_str(z1, 20) << "]";
            res.detail = os.str();
            return res;
        }
    }
    return res;
}

SweepResult sweep_parseval(std::uint64_t cases, std::uint64_t seed, std::uint64_t n_terms) {
    SweepResult res;
    std::mt19937_64 rng(seed);
    // comparisons happen in 60-digit arithmetic; this absorbs its rounding
    const Real eps("1e-40");
    for (std::uint64_t i = 0; i < cases; ++i) {
        const ParamSet p = random_balanced_reduced(rng, 40);
        const auto pp = parseval_partial(p, n_terms);
        const Rational ms = mean_square(p);
        const std::int64_t d = p.height();
        const Real truth = Real(Rational(ms - Rational(Int(d) * d, 4)) / 2);
        const Real gap = truth - pp.partial;
        ++res.cases;
        if (!(gap >= -eps && gap <= pp.tail_bound + eps)) {
            res.pass = false;
            std::ostringstream os;
            os << describe_set(p) << " gap=" << real_str(gap, 20)
               << " tail_bound=" << real_str(pp.tail_bound, 20);
            res.detail = os.str();
            return res;
        }
    }

    // the exactly known case: partial should rise toward 1/8, never past it
    const ParamSet two_one_one(std::vector<std::uint64_t>{2}, std::vector<std::uint64_t>{1, 1});
    Real prev = -1;
    for (std::uint64_t n : {std::uint64_t(10), std::uint64_t(100), std::uint64_t(1000), n_terms}) {
        const auto pp = parseval_partial(two_one_one, n);
        ++res.cases;
        if (!(pp.partial > prev && pp.partial < Real(1) / 8 &&
              Real(1) / 8 - pp.partial <= pp.tail_bound + eps)) {
            res.pass = false;
            res.detail = "a=[2] b=[1,1] partial at N=" + std::to_string(n) +
                         " does not approach 1/8 from below";
            return res;
        }
        prev = pp.partial;
    }
    return res;
}

SweepResult sweep_convolution(std::uint64_t cases, std::uint64_t seed, std::uint64_t n_max) {
    SweepResult res;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const ParamSet p = random_any(rng);
        ++res.cases;
        if (!convolution_identity_check(p, n_max)) {
            res.pass = false;
            res.detail = describe_set(p) + " violates c_n = sum_{d|n} d g(d)";
            return res;
        }
    }
    return res;
}

SweepResult sweep_reflection(std::uint64_t cases, std::uint64_t seed) {
    SweepResult res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick_num(-3000, 3000);
    std::uniform_int_distribution<std::int64_t> pick_den(2, 997);
    while (res.cases < cases) {
        const ParamSet p = random_balanced_reduced(rng, 30);
        const std::int64_t den = pick_den(rng);
        const std::int64_t num = pick_num(rng);
        bool integral_point = false;
        for (std::uint64_t v : p.a())
            if ((static_cast<std::int64_t>(v) * num) % den == 0) integral_point = true;
        for (std::uint64_t v : p.b())
            if ((static_cast<std::int64_t>(v) * num) % den == 0) integral_point = true;
        if (integral_point) continue;
        const Rational x(num, den);
        ++res.cases;
        if (evaluate(p, x) + evaluate(p, -x) != p.height()) {
            res.pass = false;
            res.detail = describe_set(p) + " x=" + rational_str(x) +
                         " breaks f(x) + f(-x) = L - K";
            return res;
        }
    }
    return res;
}

}  // namespace floorsum
