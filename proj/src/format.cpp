#include "maxwalk/format.hpp"

#include <stdexcept>

namespace maxwalk {

std::string rat_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt pow10(unsigned k) {
    BigInt p = 1;
    for (unsigned i = 0; i < k; ++i) p *= 10;
    return p;
}

// floor(log10(num/den)) for positive num, den.
long decimal_exponent(const BigInt& num, const BigInt& den) {
    long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
    auto at_least = [&](long exp) {
        // num/den >= 10^exp ?
        if (exp >= 0) return num >= den * pow10(static_cast<unsigned>(exp));
        return num * pow10(static_cast<unsigned>(-exp)) >= den;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;
    return e;
}

}  // namespace

std::string decimal_str(const Rational& q, int sig) {
    if (sig < 1) throw std::invalid_argument("decimal_str: sig must be >= 1");
    if (q == 0) return "0";

    const bool negative = q < 0;
    BigInt num = negative ? BigInt(-numerator(q)) : numerator(q);
    const BigInt den = denominator(q);

    long e = decimal_exponent(num, den);

    // digits = round(num/den * 10^(sig-1-e)), half-up
    const long k = sig - 1 - e;
    BigInt scaled_num = num;
    BigInt scaled_den = den;
    if (k >= 0)
        scaled_num *= pow10(static_cast<unsigned>(k));
    else
        scaled_den *= pow10(static_cast<unsigned>(-k));
    BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    if (digits == pow10(static_cast<unsigned>(sig))) {  // rounding carried over
        digits /= 10;
        ++e;
    }

    std::string s = digits.str();
    std::string out;
    if (e >= sig - 1) {
        out = s + std::string(static_cast<size_t>(e - sig + 1), '0');
    } else if (e >= 0) {
        out = s.substr(0, static_cast<size_t>(e + 1)) + "." + s.substr(static_cast<size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + s;
    }
    return negative ? "-" + out : out;
}

std::string real_str(const hp::Real& v, int sig) {
    if (v == 0) return "0";
    // cpp_bin_float values are dyadic rationals, so this conversion is exact.
    Rational exact = v.convert_to<Rational>();
    return decimal_str(exact, sig);
}

std::string compact_str(const hp::Real& v, int sig) {
    if (v == 0) return "0";
    Rational exact = v.convert_to<Rational>();
    const bool negative = exact < 0;
    BigInt num = negative ? BigInt(-numerator(exact)) : numerator(exact);
    long e = decimal_exponent(num, denominator(exact));
    if (e >= -4 && e < 12) return decimal_str(exact, sig);
    // d.ddd e+-k from the plain digits of the scaled value
    Rational scaled = exact;
    if (e > 0)
        scaled /= pow10(static_cast<unsigned>(e));
    else
        scaled *= pow10(static_cast<unsigned>(-e));
    return decimal_str(scaled, sig) + "e" + (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
}

}  // namespace maxwalk
