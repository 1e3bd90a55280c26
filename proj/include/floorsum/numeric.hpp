#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace floorsum {

// Exact integers and rationals, GMP-backed. Rational is kept in lowest terms
// with positive denominator (mpq canonical form); zero is 0/1.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Every inexact computation runs at 60 significant decimal digits. Printed
// output needs 15, so no rounding-error bookkeeping is required anywhere.
inline constexpr unsigned kRealDigits = 60;
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kRealDigits>>;

const Real& pi_const();
const Real& two_pi();
const Real& four_pi_squared();

// Euler-Mascheroni constant, stored as a 72-digit literal and cross-checked
// against an independently computed value in the test suite.
const Real& euler_gamma();

// floor(num/den) rounded toward -infinity; den must be > 0.
Int floor_div(const Int& num, const Int& den);

// floor(x) for a rational x, toward -infinity.
Int rational_floor(const Rational& x);

// printf %.{digits}g-style rendering.
std::string real_str(const Real& v, int digits = 15);

// "num/den" with an explicit denominator, e.g. "1/2", "-3/4", "5/1".
std::string rational_str(const Rational& q);

// Parses the "num/den" form (or a bare integer). Throws std::invalid_argument
// on malformed input or a zero denominator.
Rational parse_rational(const std::string& s);

}  // namespace floorsum
