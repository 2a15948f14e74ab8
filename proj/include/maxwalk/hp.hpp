#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "maxwalk/bigint.hpp"

namespace maxwalk::hp {

// Working real type: 50 decimal digits internally, of which the first 30
// are treated as guaranteed (validated by the precision-doubling tests
// against Real100).
using Real    = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

inline constexpr int kGuaranteedDigits = 30;

template <class R>
R pi() {
    return boost::math::constants::pi<R>();
}

template <class R>
R euler_gamma() {
    return boost::math::constants::euler<R>();
}

template <class R>
R ln2() {
    return boost::math::constants::ln_two<R>();
}

template <class R>
R sqrt_pi() {
    return sqrt(pi<R>());
}

template <class R>
R to_real(const Rational& q) {
    return R(numerator(q)) / R(denominator(q));
}

inline Real to_real(const Rational& q) {
    return to_real<Real>(q);
}

template <class R>
R to_real(const BigInt& z) {
    return R(z);
}

}  // namespace maxwalk::hp
