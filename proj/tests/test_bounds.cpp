#include "floorsum/bounds.hpp"
#include "floorsum/numeric.hpp"
#include "floorsum/sweeps.hpp"

#include "doctest.h"

#include <boost/math/constants/constants.hpp>

#include <random>

using namespace floorsum;

namespace {

bool close(const Real& v, const char* expected, const char* tol) {
    return abs(v - Real(expected)) < Real(tol);
}

}  // namespace

TEST_CASE("the stored Euler-Mascheroni literal matches an independent computation") {
    const Real independent = boost::math::constants::euler<Real>();
    CHECK(abs(euler_gamma() - independent) < Real("1e-59"));
}

TEST_CASE("zeta_m_exact") {
    CHECK(zeta_m_exact(10) == Rational(35, 8));
    CHECK(zeta_m_exact(2) == 2);
    CHECK(Real(zeta_m_exact(286)) <= mertens_upper(BigM::from_integer(286)));
    CHECK_THROWS_AS(zeta_m_exact(1), std::domain_error);
    CHECK_THROWS_AS(zeta_m_exact(20'000'000), std::domain_error);
}

TEST_CASE("zeta_m_magnitude") {
    // at s = 1 the magnitude is the exact product
    CHECK(close(zeta_m_magnitude(10, Real(1), Real(0)), "4.375", "1e-50"));
    CHECK(close(zeta_m_magnitude(2, Real(2), Real(0)),
                "1.3333333333333333333333333333333333333333", "1e-39"));
    // a generic vertical point stays inside the sandwich
    const Real mag = zeta_m_magnitude(10, Real(1), Real("17.3"));
    CHECK(close(mag, "1.7875476291763883074", "1e-12"));
    CHECK(mag >= Real(Rational(8, 35)));
    CHECK(mag <= Real(Rational(35, 8)));
    CHECK_THROWS_AS(zeta_m_magnitude(10, Real("0.5"), Real(0)), std::domain_error);
}

TEST_CASE("zeta_m sandwich sweep") {
    const SweepResult r = sweep_zetam(60, 53);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("mertens_upper") {
    CHECK(close(mertens_upper(BigM::from_integer(286)), "10.23368104490166128", "1e-12"));
    CHECK_THROWS_AS(mertens_upper(BigM::from_integer(285)), std::domain_error);
    // log-space path: M = 112371^4.96215
    const BigM m = BigM::from_power(112371, Real("4.96215"));
    CHECK(close(mertens_upper(m), "102.79689691954153092", "1e-10"));
    CHECK(close(m.log_value(), "57.7076269905", "1e-9"));
}

TEST_CASE("mertens bound dominates the exact product on a prefix sweep") {
    const SweepResult r = sweep_mertens(2000);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases == 2000 - 285);
}

TEST_CASE("sigma lower bound reproduces the two published evaluations") {
    const BoundReport b1 = sigma_lower_bound(112371, BigM::from_power(112371, Real("4.96215")));
    CHECK(close(b1.value, "0.25000080228144048429", "1e-17"));
    CHECK(abs(b1.value - Real("0.250000802")) < Real("1e-9"));
    CHECK(close(b1.main_term, "0.26936086557077693788", "1e-17"));

    const BoundReport b2 = sigma_lower_bound(502827, BigM::from_power(502827, Real("4.6602")));
    CHECK(close(b2.value, "1.000001379875313474", "1e-16"));
    CHECK(abs(b2.value - Real("1.00000138")) < Real("1e-8"));
}

TEST_CASE("sigma bound value at tiny N stays below the exactly known 1/8") {
    // For a={2}, b={1,1} (N = 3) the true sigma quantity is exactly 1/8; the
    // bound must sit below it. At this N the error term dominates and the
    // value is negative, i.e. the bound is sound but vacuous.
    const BoundReport rep = sigma_lower_bound(3, BigM::from_integer(1'000'000));
    CHECK(close(rep.value, "-0.0111240357196185", "1e-12"));
    CHECK(rep.value < Real(Rational(1, 8)));
}

TEST_CASE("meansq bound is D^2/4 + 2 sigma") {
    const BoundReport m1 =
        meansq_lower_bound(112371, 1, BigM::from_power(112371, Real("4.96215")));
    CHECK(close(m1.value, "0.75000160456288096858", "1e-16"));

    const BoundReport flat = meansq_lower_bound(2, 0, BigM::from_integer(286));
    const BoundReport sig = sigma_lower_bound(2, BigM::from_integer(286));
    CHECK(abs(flat.value - 2 * sig.value) < Real("1e-55"));

    std::mt19937_64 rng(59);
    std::uniform_int_distribution<std::uint64_t> pick_n(2, 1'000'000);
    std::uniform_int_distribution<std::int64_t> pick_d(0, 40);
    std::uniform_int_distribution<std::uint64_t> pick_m(286, 1'000'000'000);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t n = pick_n(rng);
        const std::int64_t d = pick_d(rng);
        const BigM m = (i % 2) ? BigM::from_integer(pick_m(rng))
                               : BigM::from_power(n, Real(4) + Real(i) / 10);
        const BoundReport ms = meansq_lower_bound(n, d, m);
        const BoundReport sg = sigma_lower_bound(n, m);
        const Real residue = ms.value - Real(d) * Real(d) / 4 - 2 * sg.value;
        CHECK(abs(residue) <= Real("1e-50") * (1 + abs(ms.value)));
    }
}

TEST_CASE("bound report pieces are consistent") {
    const BoundReport rep = sigma_lower_bound(1000, BigM::from_integer(100'000));
    CHECK(abs(rep.value - (rep.main_term - rep.error_term)) < Real("1e-60"));
    CHECK(abs(rep.mertens_factor * mertens_upper(rep.m) - 1) < Real("1e-55"));
}

TEST_CASE("optimize_m beats the published fixed-alpha choices") {
    const OptimizeResult r1 = optimize_m(112371);
    CHECK(r1.value >= Real("0.250000802"));
    CHECK(r1.alpha > Real("4.9"));
    CHECK(r1.alpha < Real("5.0"));
    // never below the alpha = 4 default
    CHECK(r1.value >= sigma_lower_bound(112371, BigM::from_power(112371, Real(4))).value);

    const OptimizeResult r2 = optimize_m(502827);
    CHECK(r2.value >= Real("1.00000138"));

    const OptimizeResult r3 = optimize_m(1000);
    CHECK(r3.value > Real("0.003"));  // the coarse optimum sits near alpha = 6.7
}

TEST_CASE("threshold") {
    CHECK(threshold(1, ThresholdMode::paper) == Rational(1, 4));
    CHECK(threshold(2, ThresholdMode::paper) == 1);
    CHECK(threshold(1, ThresholdMode::strict) == Rational(1, 8));
    CHECK(threshold(2, ThresholdMode::paper, 2) == 4);
    CHECK(threshold(2, ThresholdMode::strict, 2) == Rational(3, 2));
    CHECK_THROWS_AS(threshold(0, ThresholdMode::paper), std::domain_error);
    CHECK_THROWS_AS(threshold(4, ThresholdMode::paper, 1), std::domain_error);
}

TEST_CASE("min_length_bound reproduces the published length bounds") {
    const LengthBound d1 = min_length_bound(1, ThresholdMode::paper);
    CHECK(d1.n_star == 112371);
    CHECK(d1.value > Real(Rational(1, 4)));

    const LengthBound d2 = min_length_bound(2, ThresholdMode::paper);
    CHECK(d2.n_star == 502827);
    CHECK(d2.value > Real(1));

    const LengthBound s1 = min_length_bound(1, ThresholdMode::strict);
    CHECK(s1.n_star == 52957);
    CHECK(s1.n_star < d1.n_star);
    CHECK(s1.value > Real(Rational(1, 8)));
}

TEST_CASE("sigma bound is increasing in N for fixed alpha = 5") {
    Real prev("-1e100");
    for (int k = 0; k <= 60; ++k) {
        const auto n =
            static_cast<std::uint64_t>(1000.0 * std::pow(1000.0, k / 60.0) + 0.5);
        const Real v = sigma_lower_bound(n, BigM::from_power(n, Real(5))).value;
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("sigma bound is increasing near the published crossings") {
    for (auto [alpha, lo, hi, step] :
         {std::tuple{"4.96215", 100'000, 130'000, 3'000},
          std::tuple{"4.6602", 450'000, 550'000, 10'000}}) {
        Real prev("-1e100");
        for (int n = lo; n <= hi; n += step) {
            const Real v = sigma_lower_bound(n, BigM::from_power(n, Real(alpha))).value;
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("alpha = 4 bound grows like N / log^2 N once it is positive") {
    // Below ~3e6 the error term still dominates and the value is negative;
    // the N/log^2 N shape is a large-N statement.
    for (double e = 7; e <= 12; e += 1) {
        const auto n = static_cast<std::uint64_t>(std::pow(10.0, e));
        const Real v = sigma_lower_bound(n, BigM::from_power(n, Real(4))).value;
        const Real ratio = v / (Real(n) / (log(Real(n)) * log(Real(n))));
        CHECK(ratio > Real("3.0e-4"));
        CHECK(ratio < Real("5.2e-4"));
    }
}
