#include "floorsum/fourier.hpp"

#include <gmp.h>

#include <algorithm>
#include <stdexcept>

namespace floorsum {

namespace {

std::int64_t count_of(const std::vector<std::uint64_t>& side, std::uint64_t n) {
    auto [lo, hi] = std::equal_range(side.begin(), side.end(), n);
    return static_cast<std::int64_t>(hi - lo);
}

void require_positive(std::uint64_t n, const char* op) {
    if (n == 0) throw std::domain_error(std::string(op) + ": n must be >= 1");
}

}  // namespace

std::int64_t g_of(const ParamSet& p, std::uint64_t n) {
    require_positive(n, "g_of");
    return count_of(p.a(), n) - count_of(p.b(), n);
}

std::map<std::uint64_t, std::int64_t> multiplicity_function(const ParamSet& p) {
    std::map<std::uint64_t, std::int64_t> g;
    for (std::uint64_t v : p.a()) ++g[v];
    for (std::uint64_t v : p.b()) --g[v];
    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    return g;
}

std::int64_t bracket(const ParamSet& p, std::uint64_t n) {
    require_positive(n, "bracket");
    std::int64_t c = 0;
    for (std::uint64_t v : p.a())
        if (n % v == 0) c += static_cast<std::int64_t>(v);
    for (std::uint64_t v : p.b())
        if (n % v == 0) c -= static_cast<std::int64_t>(v);
    return c;
}

std::vector<std::int64_t> bracket_range(const ParamSet& p, std::uint64_t n_max) {
    std::vector<std::int64_t> c(n_max + 1, 0);
    for (const auto& [v, g] : multiplicity_function(p)) {
        const std::int64_t w = static_cast<std::int64_t>(v) * g;
        for (std::uint64_t m = v; m <= n_max; m += v) c[m] += w;
    }
    return c;
}

Real coeff_magnitude(const ParamSet& p, std::uint64_t n) {
    require_positive(n, "coeff_magnitude");
    std::int64_t c = bracket(p, n);
    if (c < 0) c = -c;
    return Real(c) / (two_pi() * n);
}

ParsevalPartial parseval_partial(const ParamSet& p, std::uint64_t n_terms) {
    p.require_balanced("parseval_partial");
    require_positive(n_terms, "parseval_partial");

    const std::vector<std::int64_t> c = bracket_range(p, n_terms);

    // Accumulate sum c_n^2/n^2 over the fixed denominator lcm(1..N)^2; one
    // reduction at the end instead of N rational additions.
    Int l = 1;
    for (std::uint64_t n = 2; n <= n_terms; ++n)
        mpz_lcm_ui(l.backend().data(), l.backend().data(), static_cast<unsigned long>(n));
    const Int d0 = l * l;

    Int num = 0;
    Int cell;
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        if (c[n] == 0) continue;
        mpz_divexact_ui(cell.backend().data(), d0.backend().data(),
                        static_cast<unsigned long>(n));
        mpz_divexact_ui(cell.backend().data(), cell.backend().data(),
                        static_cast<unsigned long>(n));
        num += cell * (Int(c[n]) * c[n]);
    }

    ParsevalPartial out;
    out.sum = Rational(num, d0);
    out.partial = Real(out.sum) / four_pi_squared();
    const Real two_s = Real(2) * Real(p.sum_a());
    out.tail_bound = two_s * two_s / (four_pi_squared() * n_terms);
    return out;
}

bool convolution_identity_check(const ParamSet& p, std::uint64_t n_max) {
    require_positive(n_max, "convolution_identity_check");
    const auto g = multiplicity_function(p);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::int64_t divisor_sum = 0;
        for (const auto& [d, gd] : g)
            if (n % d == 0) divisor_sum += static_cast<std::int64_t>(d) * gd;
        if (divisor_sum != bracket(p, n)) return false;
    }
    return true;
}

}  // namespace floorsum
