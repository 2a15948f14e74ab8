#include "maxwalk/chebyshev.hpp"

#include <stdexcept>

namespace maxwalk::cheb {

IntPolynomial cheb_poly(Kind kind, unsigned h) {
    IntPolynomial prev{{1}};  // T_0 = U_0 = 1
    if (h == 0) return prev;
    IntPolynomial cur{{0, kind == Kind::T ? 1 : 2}};  // T_1 = x, U_1 = 2x
    for (unsigned i = 1; i < h; ++i) {
        IntPolynomial next;
        next.coeff.assign(cur.coeff.size() + 1, 0);
        for (size_t d = 0; d < cur.coeff.size(); ++d) next.coeff[d + 1] = 2 * cur.coeff[d];
        for (size_t d = 0; d < prev.coeff.size(); ++d) next.coeff[d] -= prev.coeff[d];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

// Reciprocal of z^(h+1) P_{h+1}(1/z) as a power series mod z^(order+1).
// The constant term of the cleared polynomial is the leading Chebyshev
// coefficient, so the inversion is well defined.
std::vector<Rational> reciprocal_series(Kind kind, unsigned h, unsigned order) {
    IntPolynomial poly = cheb_poly(kind, h + 1);
    const size_t deg = poly.coeff.size() - 1;  // = h+1
    std::vector<BigInt> b(order + 1, 0);       // b_j = coefficient of z^j after clearing
    for (size_t j = 0; j <= deg && j <= order; ++j) b[j] = poly.coeff[deg - j];
    std::vector<Rational> r(order + 1);
    r[0] = Rational(1, b[0]);
    for (size_t t = 1; t <= order; ++t) {
        Rational acc = 0;
        for (size_t i = 1; i <= t; ++i) {
            if (b[i] != 0) acc += b[i] * r[t - i];
        }
        r[t] = -acc / b[0];
    }
    return r;
}

}  // namespace

Rational gf_coefficient(Kind kind, unsigned h, unsigned n) {
    if (kind == Kind::T && n == 0)
        throw std::domain_error("gf_coefficient: kind T is out of validity at n = 0");
    if (n < h || (n - h) % 2 != 0) return 0;
    auto r = reciprocal_series(kind, h, n - h);
    return 2 * r[n - h];
}

std::vector<Rational> gf_coefficients(Kind kind, unsigned h, unsigned n_max) {
    std::vector<Rational> values(n_max + 1, Rational(0));
    if (n_max >= h) {
        auto r = reciprocal_series(kind, h, n_max - h);
        for (unsigned n = h; n <= n_max; ++n) values[n] = 2 * r[n - h];
    }
    if (kind == Kind::T) values[0] = 0;
    return values;
}

HeightSpectrum height_spectrum_series(unsigned n, WalkDomain domain) {
    HeightSpectrum spectrum;
    spectrum.length = n;
    spectrum.domain = domain;
    if (n == 0) {
        if (domain == WalkDomain::ReflectiveN0)
            throw std::domain_error("height_spectrum_series: T series is out of validity at n = 0");
        spectrum.entries[0] = gf_coefficient(Kind::U, 0, 0);
        spectrum.total = spectrum.entries[0];
        return spectrum;
    }
    const Kind kind = domain == WalkDomain::ReflectiveN0 ? Kind::T : Kind::U;
    for (unsigned h = 2 - n % 2; h <= n; h += 2) {
        Rational value = gf_coefficient(kind, h, n);
        if (value != 0) {
            spectrum.entries[h] = value;
            spectrum.total += value;
        }
    }
    return spectrum;
}

std::vector<Rational> det_poly(unsigned h, WalkDomain domain) {
    // D_0 = 1; D_1 = 1 - z^2/4 (fair band) or 1 - z^2/2 (reflecting row).
    std::vector<Rational> prev{1};
    if (h == 0) return prev;
    std::vector<Rational> cur{1, 0, domain == WalkDomain::FreeZ ? Rational(-1, 4) : Rational(-1, 2)};
    for (unsigned i = 1; i < h; ++i) {
        std::vector<Rational> next(cur.size() + 2, Rational(0));
        for (size_t d = 0; d < cur.size(); ++d) next[d] = cur[d];
        for (size_t d = 0; d < prev.size(); ++d) next[d + 2] -= prev[d] / 4;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool det_identity_check(unsigned h, WalkDomain domain) {
    auto det = det_poly(h, domain);
    const BigInt scale = domain == WalkDomain::FreeZ ? pow2(h + 1) : pow2(h);
    IntPolynomial cheb = cheb_poly(domain == WalkDomain::FreeZ ? Kind::U : Kind::T, h + 1);
    // z^(h+1) P_{h+1}(1/z): coefficient of z^j is the Chebyshev coefficient
    // of degree h+1-j.
    const size_t deg = cheb.coeff.size() - 1;
    for (size_t j = 0; j <= deg; ++j) {
        Rational lhs = j < det.size() ? scale * det[j] : Rational(0);
        if (lhs != cheb.coeff[deg - j]) return false;
    }
    for (size_t j = deg + 1; j < det.size(); ++j)
        if (det[j] != 0) return false;
    return true;
}

}  // namespace maxwalk::cheb
