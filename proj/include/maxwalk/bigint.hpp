#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxwalk {

// All exact counts are arbitrary-precision integers; all exact
// probabilities are arbitrary-precision rationals.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) {
    BigInt one = 1;
    return one << k;
}

inline BigInt numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

// C(n, k) by multiplicative updates; exact, zero outside the support.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

// Row C(n, 0), ..., C(n, floor(n/2)); the upper half follows by symmetry.
// One pass of multiplicative updates, so large rows stay cheap.
inline std::vector<BigInt> binomial_half_row(unsigned n) {
    std::vector<BigInt> row(n / 2 + 1);
    row[0] = 1;
    for (unsigned j = 1; j <= n / 2; ++j) {
        row[j] = row[j - 1] * (n - j + 1);
        row[j] /= j;
    }
    return row;
}

inline BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace maxwalk
