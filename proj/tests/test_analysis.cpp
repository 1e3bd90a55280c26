#include "floorsum/fourier.hpp"
#include "floorsum/param_set.hpp"
#include "floorsum/sampling.hpp"
#include "floorsum/step_function.hpp"
#include "floorsum/sweeps.hpp"

#include "doctest.h"

#include <random>

using namespace floorsum;

namespace {
using V = std::vector<std::uint64_t>;
}

TEST_CASE("g_of is the multiplicity difference") {
    const ParamSet p(V{2}, V{1, 1});
    CHECK(g_of(p, 1) == -2);
    CHECK(g_of(p, 2) == 1);
    CHECK(g_of(p, 3) == 0);
}

TEST_CASE("brackets c_n") {
    const ParamSet p(V{2}, V{1, 1});
    CHECK(bracket(p, 1) == -2);
    CHECK(bracket(p, 2) == 0);
    CHECK(bracket(ParamSet(V{30, 1}, V{15, 10, 6}), 30) == 0);
}

TEST_CASE("bracket_range matches per-n brackets") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const ParamSet p = random_any(rng);
        const auto c = bracket_range(p, 200);
        for (std::uint64_t n = 1; n <= 200; ++n) CHECK(c[n] == bracket(p, n));
    }
}

TEST_CASE("coeff_magnitude = |c_n|/(2 pi n)") {
    const ParamSet p(V{2}, V{1, 1});
    CHECK(static_cast<double>(coeff_magnitude(p, 1)) ==
          doctest::Approx(0.3183098861837907).epsilon(1e-14));  // 1/pi
    CHECK(coeff_magnitude(p, 2) == 0);
    CHECK(coeff_magnitude(ParamSet(V{7}, V{3, 4}), 5) == 0);  // no divisors among a u b
}

TEST_CASE("multiplicity function invariants") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        const ParamSet p = random_balanced_reduced(rng, 30);
        const auto g = multiplicity_function(p);
        std::int64_t weighted = 0;
        std::int64_t square_sum = 0;
        bool multiplicity_free = true;
        for (const auto& [v, gv] : g) {
            weighted += static_cast<std::int64_t>(v) * gv;
            square_sum += gv * gv;
            if (gv != 1 && gv != -1) multiplicity_free = false;
        }
        CHECK(weighted == 0);  // balanced
        const auto len = static_cast<std::int64_t>(p.length());
        CHECK(square_sum >= len);  // reduced
        CHECK((square_sum == len) == multiplicity_free);
    }
}

TEST_CASE("parseval partial sums: the exactly known case a={2}, b={1,1}") {
    const ParamSet p(V{2}, V{1, 1});
    const auto pp = parseval_partial(p, 9);
    // c_n = -2 on odd n, 0 on even; sum c_n^2/n^2 = 4(1 + 1/9 + 1/25 + 1/49 + 1/81)
    CHECK(pp.sum == Rational(469876, 99225));
    CHECK(static_cast<double>(pp.partial) == doctest::Approx(0.11995059835003049).epsilon(1e-13));

    // partial(N) rises toward the limit 1/8 and never passes it
    Real prev = -1;
    for (std::uint64_t n : {10, 100, 1000, 10000}) {
        const auto q = parseval_partial(p, n);
        CHECK(q.partial > prev);
        CHECK(q.partial < Real(1) / 8);
        CHECK(Real(1) / 8 - q.partial <= q.tail_bound);
        prev = q.partial;
    }
}

TEST_CASE("parseval partial sums approach (mean_square - D^2/4)/2") {
    const ParamSet p(V{3}, V{1, 2});  // mean square 1/2, D = 1, limit 1/8
    const auto pp = parseval_partial(p, 10'000);
    const Real limit = Real(Rational(1, 8));
    CHECK(pp.partial <= limit);
    CHECK(limit - pp.partial <= pp.tail_bound);
}

TEST_CASE("parseval sandwich on random balanced reduced sets") {
    const SweepResult r = sweep_parseval(15, 41, 2000);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("parseval rejects unbalanced sets") {
    CHECK_THROWS_AS(parseval_partial(ParamSet(V{1, 5}, V{2, 3}), 100), UnbalancedInput);
}

TEST_CASE("divisor-sum convolution identity") {
    CHECK(convolution_identity_check(ParamSet(V{2}, V{1, 1}), 100));
    CHECK(convolution_identity_check(ParamSet(V{30, 1}, V{15, 10, 6}), 1000));
    CHECK(convolution_identity_check(ParamSet(V{9, 9, 2}, V{7, 7, 7}), 1));  // c_1 = g(1)
    const SweepResult r = sweep_convolution(50, 43, 500);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("reflection sweep") {
    const SweepResult r = sweep_reflection(5000, 47);
    INFO(r.detail);
    CHECK(r.pass);
}
