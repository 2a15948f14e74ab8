#pragma once

#include <string>

#include "maxwalk/bigint.hpp"
#include "maxwalk/hp.hpp"

namespace maxwalk {

// "num/den" for proper fractions, plain integer when the denominator is 1.
std::string rat_str(const Rational& q);

// Plain (non-scientific) decimal with exactly `sig` significant digits,
// round-half-up. Exact: no floating-point intermediate.
std::string decimal_str(const Rational& q, int sig);

// Same format for reals; the value is converted to its exact dyadic
// rational first, so identical inputs always print identically.
std::string real_str(const hp::Real& v, int sig);

// Like real_str but switches to mantissa/exponent notation when the
// magnitude leaves [1e-4, 1e12); for log output, not for file formats.
std::string compact_str(const hp::Real& v, int sig);

}  // namespace maxwalk
