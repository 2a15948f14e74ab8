#include "maxwalk/closed_form.hpp"

#include <stdexcept>

namespace maxwalk::closed_form {

Rational tau(unsigned h, unsigned k) {
    return Rational(BigInt(h + 1) * (2 * k + 1), 2);
}

Rational upsilon(unsigned h, unsigned k) {
    return Rational(BigInt(h + 2) * (2 * k + 1), 2);
}

namespace {

// Numerator of p_n^(h) against the fixed denominator 2^(n-1) (n+1).
BigInt p_numerator(unsigned n, unsigned h, const std::vector<BigInt>& row) {
    const unsigned long N = n + 1;
    const unsigned long a = h + 1;
    BigInt num = 0;
    for (unsigned long k = 0;; ++k) {
        const unsigned long idx = a * (2 * k + 1);
        if (idx > N) break;
        const unsigned long j = (N - idx) / 2;
        BigInt term = BigInt(idx) * row[j];
        if (k % 2 == 0)
            num += term;
        else
            num -= term;
    }
    return num;
}

// Numerator of q_n^(h) against the fixed denominator 2^n (n+1) (n+2).
BigInt q_numerator(unsigned n, unsigned h, const std::vector<BigInt>& row) {
    const unsigned long N = n + 2;
    const unsigned long a = h + 2;
    BigInt num = 0;
    for (unsigned long k = 0;; ++k) {
        const unsigned long idx = a * (2 * k + 1);
        if (idx > N) break;
        const unsigned long j = (N - idx) / 2;
        num += (BigInt(idx) * idx - N) * row[j];
    }
    return num;
}

BigInt p_denominator(unsigned n) { return pow2(n - 1) * (n + 1); }

BigInt q_denominator(unsigned n) { return pow2(n) * BigInt(n + 1) * (n + 2); }

}  // namespace

Rational p_height(unsigned n, unsigned h) {
    if (n < 1) throw std::domain_error("p_height: out of validity (requires n >= 1)");
    if (h % 2 != n % 2 || h > n) return 0;
    auto row = binomial_half_row(n + 1);
    return Rational(p_numerator(n, h, row), p_denominator(n));
}

Rational q_height(unsigned n, unsigned h) {
    if (h % 2 != n % 2 || h > n) return 0;
    auto row = binomial_half_row(n + 2);
    return Rational(q_numerator(n, h, row), q_denominator(n));
}

HeightSpectrum p_spectrum(unsigned n) {
    HeightSpectrum spectrum;
    spectrum.length = n;
    spectrum.domain = WalkDomain::ReflectiveN0;
    if (n == 0) {  // p_0 = 1 by convention, outside the formula's range
        spectrum.entries[0] = 1;
        spectrum.total = 1;
        return spectrum;
    }
    auto row = binomial_half_row(n + 1);
    const BigInt denom = p_denominator(n);
    BigInt total_num = 0;
    for (unsigned h = 2 - n % 2; h <= n; h += 2) {
        BigInt num = p_numerator(n, h, row);
        if (num != 0) spectrum.entries[h] = Rational(num, denom);
        total_num += num;
    }
    spectrum.total = Rational(total_num, denom);
    return spectrum;
}

HeightSpectrum q_spectrum(unsigned n) {
    HeightSpectrum spectrum;
    spectrum.length = n;
    spectrum.domain = WalkDomain::FreeZ;
    if (n == 0) {
        spectrum.entries[0] = 1;
        spectrum.total = 1;
        return spectrum;
    }
    auto row = binomial_half_row(n + 2);
    const BigInt denom = q_denominator(n);
    BigInt total_num = 0;
    for (unsigned h = 2 - n % 2; h <= n; h += 2) {
        BigInt num = q_numerator(n, h, row);
        if (num != 0) spectrum.entries[h] = Rational(num, denom);
        total_num += num;
    }
    spectrum.total = Rational(total_num, denom);
    return spectrum;
}

Rational p_total(unsigned n) {
    if (n == 0) return 1;
    auto row = binomial_half_row(n + 1);
    BigInt total_num = 0;
    for (unsigned h = 2 - n % 2; h <= n; h += 2) total_num += p_numerator(n, h, row);
    return Rational(total_num, p_denominator(n));
}

Rational q_total(unsigned n) {
    if (n == 0) return 1;
    auto row = binomial_half_row(n + 2);
    BigInt total_num = 0;
    for (unsigned h = 2 - n % 2; h <= n; h += 2) total_num += q_numerator(n, h, row);
    return Rational(total_num, q_denominator(n));
}

HeightSpectrum spectrum(unsigned n, WalkDomain domain) {
    return domain == WalkDomain::ReflectiveN0 ? p_spectrum(n) : q_spectrum(n);
}

Rational total(unsigned n, WalkDomain domain) {
    return domain == WalkDomain::ReflectiveN0 ? p_total(n) : q_total(n);
}

Rational shifted_moment(unsigned n, WalkDomain domain, unsigned r, unsigned shift) {
    if (n == 0) {
        BigInt power = 1;
        for (unsigned i = 0; i < r; ++i) power *= shift;
        return Rational(power);
    }
    auto row = binomial_half_row(n + 2 - (domain == WalkDomain::ReflectiveN0 ? 1 : 0));
    BigInt weighted = 0, total_num = 0;
    for (unsigned h = 2 - n % 2; h <= n; h += 2) {
        BigInt num = domain == WalkDomain::ReflectiveN0 ? p_numerator(n, h, row)
                                                        : q_numerator(n, h, row);
        BigInt base = h + shift, power = 1;
        for (unsigned i = 0; i < r; ++i) power *= base;
        weighted += power * num;
        total_num += num;
    }
    if (total_num == 0) throw std::domain_error("shifted_moment: undefined distribution");
    return Rational(weighted, total_num);
}

unsigned long term_count(unsigned n, WalkDomain domain) {
    if (n == 0) return 1;
    const unsigned long N = n + (domain == WalkDomain::ReflectiveN0 ? 1 : 2);
    const unsigned base = domain == WalkDomain::ReflectiveN0 ? 1 : 2;
    unsigned long count = 0;
    for (unsigned h = 2 - n % 2; h <= n; h += 2) {
        const unsigned long a = h + base;
        for (unsigned long k = 0; a * (2 * k + 1) <= N; ++k) ++count;
    }
    return count;
}

}  // namespace maxwalk::closed_form
