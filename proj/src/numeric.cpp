#include "floorsum/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>
#include <stdexcept>

namespace floorsum {

const Real& pi_const() {
    static const Real v = boost::math::constants::pi<Real>();
    return v;
}

const Real& two_pi() {
    static const Real v = 2 * pi_const();
    return v;
}

const Real& four_pi_squared() {
    static const Real v = 4 * pi_const() * pi_const();
    return v;
}

const Real& euler_gamma() {
    static const Real v(
        "0.577215664901532860606512090082402431042159335939923598805767234884867727");
    return v;
}

Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
    return q;
}

Int rational_floor(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

std::string real_str(const Real& v, int digits) {
    if (digits < 1) digits = 1;
    // default ios flags give the %g-style shortest fixed/scientific form
    return v.str(digits, std::ios_base::fmtflags(0));
}

std::string rational_str(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
}

}  // namespace floorsum
