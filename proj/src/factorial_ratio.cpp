#include "floorsum/factorial_ratio.hpp"

#include <gmp.h>

#include <stdexcept>

namespace floorsum {

namespace {

// (2e6)! already has ~12.7 million digits; anything bigger is a caller error.
constexpr std::uint64_t kMaxFactorialArg = 2'000'000;

Int factorial(std::uint64_t m) {
    Int f;
    mpz_fac_ui(f.backend().data(), static_cast<unsigned long>(m));
    return f;
}

}  // namespace

Rational un_term(const ParamSet& p, std::uint64_t n) {
    if (n == 0) throw std::domain_error("un_term: n must be >= 1");
    Int num = 1, den = 1;
    for (std::uint64_t v : p.a()) {
        if (v > kMaxFactorialArg / n)
            throw std::domain_error("un_term: factorial argument too large");
        num *= factorial(v * n);
    }
    for (std::uint64_t v : p.b()) {
        if (v > kMaxFactorialArg / n)
            throw std::domain_error("un_term: factorial argument too large");
        den *= factorial(v * n);
    }
    return Rational(num, den);  // reduced by construction
}

std::optional<std::uint64_t> integrality_scan(const ParamSet& p, std::uint64_t n_max) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (denominator(un_term(p, n)) != 1) return n;
    }
    return std::nullopt;
}

}  // namespace floorsum
