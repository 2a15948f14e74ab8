#pragma once

#include <stdexcept>

#include "maxwalk/bigint.hpp"
#include "maxwalk/hp.hpp"

namespace maxwalk::special {

// Bernoulli numbers (B_1 = -1/2 convention), exact and memoized.
Rational bernoulli(unsigned k);

// Harmonic-style partial sums used by the digamma closed forms.
Rational harmonic(unsigned n);        // sum_{i=1}^n 1/i
Rational odd_harmonic(unsigned n);    // sum_{i=1}^n 1/(2i-1)

namespace detail {

// Alternating-series acceleration (Cohen, Rodriguez Villegas, Zagier):
// sum_{k>=0} (-1)^k a(k) with geometric error (3+sqrt(8))^(-terms).
template <class R, class TermFn>
R alternating_sum(TermFn a, int terms) {
    R d = pow(R(3) + 2 * sqrt(R(2)), terms);
    d = (d + 1 / d) / 2;
    R b = -1, c = -d, s = 0;
    for (int k = 0; k < terms; ++k) {
        c = b - c;
        s += c * a(k);
        b *= R(2) * (k + terms) * (k - terms) / ((2 * k + 1) * (k + 1));
    }
    return s / d;
}

template <class R>
int acceleration_terms() {
    // enough for the full working precision of R, with headroom
    return static_cast<int>(std::numeric_limits<R>::digits10 * 1.35) + 12;
}

}  // namespace detail

// Dirichlet beta: sum_{k>=0} (-1)^k (2k+1)^(-s), s >= 1.
template <class R>
R dirichlet_beta(int s) {
    if (s < 1) throw std::domain_error("dirichlet_beta: requires s >= 1");
    return detail::alternating_sum<R>(
        [s](int k) { return 1 / pow(R(2 * k + 1), s); },
        detail::acceleration_terms<R>());
}

// Riemann zeta at integers, s != 1. Positive even values go through
// Bernoulli numbers and powers of pi, positive odd values through the
// accelerated eta series, non-positive ones are rational.
template <class R>
R zeta(int s) {
    if (s == 1) throw std::domain_error("zeta: pole at s = 1");
    if (s <= 0) {
        // zeta(-n) = (-1)^n B_{n+1}/(n+1), with the B_1 = -1/2 convention
        unsigned n = static_cast<unsigned>(-s);
        Rational value = bernoulli(n + 1) / (n + 1);
        return hp::to_real<R>(n % 2 == 0 ? value : -value);
    }
    if (s % 2 == 0) {
        unsigned half = static_cast<unsigned>(s) / 2;
        R value = hp::to_real<R>(bernoulli(s)) * pow(2 * hp::pi<R>(), s) /
                  (2 * hp::to_real<R>(Rational(factorial(static_cast<unsigned>(s)))));
        return half % 2 == 0 ? -value : value;
    }
    R eta = detail::alternating_sum<R>(
        [s](int k) { return 1 / pow(R(k + 1), s); },
        detail::acceleration_terms<R>());
    return eta / (1 - pow(R(2), 1 - s));
}

// Hurwitz zeta for integer s >= 2 and rational 0 < a <= 1, by
// Euler-Maclaurin. Independent route used to cross-check beta and zeta.
template <class R>
R hurwitz_zeta(int s, const Rational& a) {
    if (s < 2) throw std::domain_error("hurwitz_zeta: requires s >= 2");
    if (a <= 0 || a > 1) throw std::domain_error("hurwitz_zeta: requires 0 < a <= 1");
    const int cutoff = std::numeric_limits<R>::digits10;  // summed terms
    const int tail_order = std::numeric_limits<R>::digits10 / 2 + 8;
    const R av = hp::to_real<R>(a);
    R sum = 0;
    for (int k = 0; k < cutoff; ++k) sum += 1 / pow(av + k, s);
    const R edge = av + cutoff;
    sum += pow(edge, 1 - s) / (s - 1);
    sum += pow(edge, -s) / 2;
    // sum_r B_{2r}/(2r)! (s)_{2r-1} edge^(-s-2r+1)
    R rising = s;  // (s)_1
    for (int r = 1; r <= tail_order; ++r) {
        R coeff = hp::to_real<R>(bernoulli(2 * r) / Rational(factorial(2 * r)));
        sum += coeff * rising * pow(edge, -s - 2 * r + 1);
        rising *= (s + 2 * r - 1) * (s + 2 * r);
    }
    return sum;
}

// Gamma at positive half-integers: exact factorial part times sqrt(pi)
// when the argument is a proper half-integer.
template <class R>
R gamma_half(int twice_x) {
    if (twice_x <= 0) throw std::domain_error("gamma_half: requires x > 0");
    if (twice_x % 2 == 0) return hp::to_real<R>(Rational(factorial(twice_x / 2 - 1)));
    // Gamma(1/2 + j) = sqrt(pi) (2j)! / (4^j j!)
    unsigned j = (twice_x - 1) / 2;
    Rational factor(factorial(2 * j), pow2(2 * j) * factorial(j));
    return hp::sqrt_pi<R>() * hp::to_real<R>(factor);
}

// Digamma at positive half-integers: psi(j) = -gamma + H_{j-1},
// psi(j + 1/2) = -gamma - 2 ln 2 + 2 sum_{i<=j} 1/(2i-1).
template <class R>
R digamma_half(int twice_x) {
    if (twice_x <= 0) throw std::domain_error("digamma_half: requires x > 0");
    if (twice_x % 2 == 0)
        return -hp::euler_gamma<R>() + hp::to_real<R>(harmonic(twice_x / 2 - 1));
    unsigned j = (twice_x - 1) / 2;
    return -hp::euler_gamma<R>() - 2 * hp::ln2<R>() + 2 * hp::to_real<R>(odd_harmonic(j));
}

// The parity-dependent zeta-like factor of the harmonic-sum main terms.
// The T family sums (h+1)^(-s) over one parity class of h, the U family
// (h+2)^(-s).
enum class KappaFamily { T, U };
enum class MParity { Integer, HalfInteger };

template <class R>
R kappa(KappaFamily family, MParity parity, int s) {
    R z = zeta<R>(s);
    if (parity == MParity::Integer) return pow(R(2), -s) * z;
    R value = (1 - pow(R(2), -s)) * z;
    if (family == KappaFamily::U) value -= 1;
    return value;
}

// Catalan's constant, defined here as beta(2).
template <class R>
R catalan() {
    return dirichlet_beta<R>(2);
}

}  // namespace maxwalk::special
