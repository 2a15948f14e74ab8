#include "maxwalk/asymptotics.hpp"

#include <mutex>
#include <stdexcept>

#include "maxwalk/special.hpp"

namespace maxwalk::asym {

namespace {

// ---------------------------------------------------------------------
// Stirling coefficients d_r: exponentiate sum_{k>=1} B_{2k}/(2k(2k-1)) x^(2k-1)
// as a formal power series over exact rationals.
std::vector<Rational> stirling_series(unsigned r_max) {
    std::vector<Rational> a(r_max + 1, Rational(0));
    for (unsigned k = 1; 2 * k - 1 <= r_max; ++k)
        a[2 * k - 1] = special::bernoulli(2 * k) / (BigInt(2 * k) * (2 * k - 1));
    std::vector<Rational> d(r_max + 1, Rational(0));
    d[0] = 1;
    for (unsigned r = 1; r <= r_max; ++r) {
        Rational acc = 0;
        for (unsigned i = 1; i <= r; ++i) acc += BigInt(i) * a[i] * d[r - i];
        d[r] = acc / r;
    }
    return d;
}

// ---------------------------------------------------------------------
// Bivariate truncated polynomials in (alpha, 1/n): cell [l][a] holds the
// coefficient of alpha^a n^(-l).
constexpr unsigned kLMax = 8;
constexpr unsigned kAMax = 12;

struct Poly2 {
    std::vector<std::vector<Rational>> cell;

    Poly2() : cell(kLMax + 1, std::vector<Rational>(kAMax + 1, Rational(0))) {}

    static Poly2 one() {
        Poly2 p;
        p.cell[0][0] = 1;
        return p;
    }

    void add(unsigned l, unsigned a, const Rational& v) {
        if (l <= kLMax && a <= kAMax) cell[l][a] += v;
    }

    Poly2 operator*(const Poly2& other) const {
        Poly2 out;
        for (unsigned l1 = 0; l1 <= kLMax; ++l1)
            for (unsigned a1 = 0; a1 <= kAMax; ++a1) {
                if (cell[l1][a1] == 0) continue;
                for (unsigned l2 = 0; l1 + l2 <= kLMax; ++l2)
                    for (unsigned a2 = 0; a1 + a2 <= kAMax; ++a2) {
                        if (other.cell[l2][a2] == 0) continue;
                        out.cell[l1 + l2][a1 + a2] += cell[l1][a1] * other.cell[l2][a2];
                    }
            }
        return out;
    }
};

struct StirlingData {
    std::vector<Rational> d;  // d_0..d_12
    Poly2 c;                  // S(alpha, n) correction series
};

const StirlingData& stirling_data() {
    static const StirlingData data = [] {
        StirlingData out;
        out.d = stirling_series(12);

        // factor 1: sum_r d_r / (2n)^r
        Poly2 f1;
        for (unsigned r = 0; r <= kLMax; ++r) f1.add(r, 0, out.d[r] / pow2(r));

        // factors 2 and 3: sum_r (-1)^r d_r / (n +- alpha)^r with
        // 1/(n+-alpha)^r = n^-r sum_i C(r+i-1, i) (-+alpha/n)^i
        Poly2 f2, f3;
        f2.add(0, 0, Rational(1));
        f3.add(0, 0, Rational(1));
        for (unsigned r = 1; r <= kLMax; ++r) {
            Rational sign_d = r % 2 == 0 ? out.d[r] : -out.d[r];
            for (unsigned i = 0; r + i <= kLMax && i <= kAMax; ++i) {
                Rational base = sign_d * binomial(r + i - 1, i);
                f2.add(r + i, i, i % 2 == 0 ? base : -base);
                f3.add(r + i, i, base);
            }
        }

        // factor 4: (1 - alpha^2/n^2)^(-1/2) = sum_r C(2r, r) 4^-r alpha^(2r) n^(-2r)
        Poly2 f4;
        for (unsigned r = 0; 2 * r <= kLMax && 2 * r <= kAMax; ++r)
            f4.add(2 * r, 2 * r, Rational(binomial(2 * r, r), pow2(2 * r)));

        // factor 5: sum_r 1/r! alpha^(4r) n^(-3r) bracket^r with
        // bracket = sum_t -1/((t+2)(2t+3)) alpha^(2t) n^(-2t)
        Poly2 bracket;
        for (unsigned t = 0; 2 * t <= kLMax && 2 * t <= kAMax; ++t)
            bracket.add(2 * t, 2 * t, Rational(-1, BigInt(t + 2) * (2 * t + 3)));
        Poly2 f5;
        Poly2 bracket_pow = Poly2::one();
        for (unsigned r = 0; 3 * r <= kLMax; ++r) {
            if (r > 0) bracket_pow = bracket_pow * bracket;
            Rational inv_fact(1, factorial(r));
            for (unsigned l = 0; l + 3 * r <= kLMax; ++l)
                for (unsigned a = 0; a + 4 * r <= kAMax; ++a)
                    if (bracket_pow.cell[l][a] != 0)
                        f5.add(l + 3 * r, a + 4 * r, inv_fact * bracket_pow.cell[l][a]);
        }

        out.c = f1 * f2 * f3 * f4 * f5;
        return out;
    }();
    return data;
}

const Real& catalan_const() {
    static const Real value = special::catalan<Real>();
    return value;
}

const Real& zeta3_const() {
    static const Real value = special::zeta<Real>(3);
    return value;
}

}  // namespace

Rational stirling_d(unsigned r) {
    if (r > 12) throw std::domain_error("stirling_d: tabulated only up to r = 12");
    return stirling_data().d[r];
}

Rational binom_c(unsigned l, unsigned j) {
    if (l > kLMax) throw std::domain_error("binom_c: tabulated only up to l = 8");
    if (2 * j > kAMax) return 0;
    return stirling_data().c.cell[l][2 * j];
}

Real central_binom_approx(HalfInt n, HalfInt alpha, unsigned L) {
    if ((n.twice - alpha.twice) % 2 != 0)
        throw std::domain_error("central_binom_approx: n - alpha must be an integer");
    if (L > kLMax) throw std::domain_error("central_binom_approx: truncation order exceeds 8");
    // Out-of-validity guard at |alpha| > (2n)^(2/3), i.e. |2 alpha|^3 > 32 n^2;
    // past that the binomial decays faster than any power and the caller
    // should switch regimes.
    BigInt a3 = BigInt(alpha.twice < 0 ? -alpha.twice : alpha.twice);
    a3 = a3 * a3 * a3;
    if (a3 > 8 * BigInt(n.twice) * n.twice)
        throw std::domain_error("central_binom_approx: shift is out of the validity window");

    const Real nv = n.value<Real>();
    const Real av = alpha.value<Real>();
    // S truncated at total order L keeps all rows l <= L, so L = 0 is the
    // bare S = 1 approximation.
    Real s = 0;
    for (unsigned l = 0; l <= L; ++l) {
        Real row = 0;
        for (unsigned j = 0; 3 * j <= 2 * l; ++j) {
            Rational c = binom_c(l, j);
            if (c != 0) row += hp::to_real<Real>(c) * pow(av, 2 * int(j));
        }
        s += row / pow(nv, int(l));
    }
    Real lead = pow(Real(2), n.twice) / sqrt(nv * hp::pi<Real>());
    return lead * exp(-av * av / nv) * s;
}

// ---------------------------------------------------------------------
// Direct theta-like summations for the Mellin checks. Terms are cut once
// they stay below an absolute threshold tied to the main term's size, with
// a two-miss lookahead to get past sign changes.

namespace {

constexpr double kTailCut = 1e-42;

}  // namespace

MellinCheck mellin_T(unsigned j, unsigned r, HalfInt m) {
    const Real mv = m.value<Real>();
    const Real scale = pow(mv, Real(2 * j + 2 + r) / 2);
    const Real threshold = Real(kTailCut) * scale;

    Real lhs = 0;
    unsigned misses_h = 0;
    // h+1 even for integer m, odd otherwise
    for (unsigned h = m.is_integer() ? 1 : 0; misses_h < 2; h += 2) {
        const Real base = Real(h + 1);
        const Real weight_r = pow(base, int(r));
        unsigned misses_k = 0;
        bool first = true;
        for (unsigned k = 0; misses_k < 2; ++k) {
            Real tau = base * (2 * k + 1) / 2;
            Real term = pow(tau, 2 * int(j) + 1) * weight_r * exp(-tau * tau / mv);
            if (first) {
                if (term < threshold)
                    ++misses_h;
                else
                    misses_h = 0;
                first = false;
            }
            if (term < threshold)
                ++misses_k;
            else
                misses_k = 0;
            lhs += k % 2 == 0 ? term : -term;
        }
    }

    Real rhs = pow(Real(2), int(r) - 1) * special::gamma_half<Real>(2 * j + 2 + r) *
               special::dirichlet_beta<Real>(r + 1) * scale;
    return {lhs, rhs};
}

MellinCheck mellin_U(UCase c, unsigned j, unsigned r, HalfInt m) {
    const bool valid = (c == UCase::Zero && j == 0 && r == 0) ||
                       (c == UCase::LogCase && j >= 1 && r == 0) ||
                       (c == UCase::PowerCase && r >= 1);
    if (!valid) throw std::domain_error("mellin_U: case/parameter mismatch");

    const Real mv = m.value<Real>();
    const Real scale = pow(mv, Real(2 * j + r + 1) / 2) * (2 + log(mv));
    const Real threshold = Real(kTailCut) * scale;

    Real lhs = 0;
    unsigned misses_h = 0;
    // h even for integer m, odd otherwise
    for (unsigned h = m.is_integer() ? 0 : 1; misses_h < 2; h += 2) {
        const Real base = Real(h + 2);
        const Real weight_r = pow(base, int(r));
        unsigned misses_k = 0;
        bool first = true;
        for (unsigned k = 0; misses_k < 2; ++k) {
            Real ups = base * (2 * k + 1) / 2;
            Real ups2 = ups * ups;
            Real term = (2 * ups2 - mv) / mv * pow(ups, 2 * int(j)) * weight_r * exp(-ups2 / mv);
            if (first) {
                if (abs(term) < threshold)
                    ++misses_h;
                else
                    misses_h = 0;
                first = false;
            }
            if (abs(term) < threshold)
                ++misses_k;
            else
                misses_k = 0;
            lhs += term;
        }
    }

    Real rhs;
    switch (c) {
        case UCase::Zero:
            rhs = sqrt(mv * hp::pi<Real>()) / 4;
            break;
        case UCase::LogCase: {
            Real bracket = log(mv) / 2 + 2 * hp::euler_gamma<Real>() + hp::ln2<Real>() +
                           special::digamma_half<Real>(2 * j + 1) / 2 + Real(1) / (2 * j);
            if (!m.is_integer()) bracket += 2 * hp::ln2<Real>() - 2;
            rhs = bracket * Real(j) / 2 * special::gamma_half<Real>(2 * j + 1) *
                  pow(mv, Real(2 * j + 1) / 2);
            break;
        }
        case UCase::PowerCase: {
            using special::KappaFamily;
            using special::MParity;
            Real kappa = special::kappa<Real>(
                KappaFamily::U, m.is_integer() ? MParity::Integer : MParity::HalfInteger,
                1 - int(r));
            rhs = Real(j) * special::gamma_half<Real>(2 * j + 1) * kappa *
                  pow(mv, Real(2 * j + 1) / 2);
            rhs += Real(2 * j + r) / 4 * special::gamma_half<Real>(2 * j + r + 1) *
                   (pow(Real(2), int(r) + 1) - 1) * special::zeta<Real>(r + 1) *
                   pow(mv, Real(2 * j + r + 1) / 2);
            break;
        }
    }
    return {lhs, rhs};
}

// ---------------------------------------------------------------------
// Printed expansions.

Real Coefficient::value() const {
    static const Real sqrt2 = sqrt(Real(2));
    const Real sqrtpi = hp::sqrt_pi<Real>();
    Real acc = 0;
    for (const auto& term : terms) {
        Real v = hp::to_real<Real>(term.factor);
        if (term.mono.two_half != 0) v *= pow(sqrt2, term.mono.two_half);
        if (term.mono.pi_half != 0) v *= pow(sqrtpi, term.mono.pi_half);
        if (term.mono.g_pow != 0) v *= pow(catalan_const(), term.mono.g_pow);
        if (term.mono.zeta3_pow != 0) v *= pow(zeta3_const(), term.mono.zeta3_pow);
        acc += v;
    }
    return acc;
}

bool Coefficient::is_rational() const {
    for (const auto& term : terms) {
        const auto& m = term.mono;
        if (m.two_half != 0 || m.pi_half != 0 || m.g_pow != 0 || m.zeta3_pow != 0) return false;
    }
    return true;
}

Rational Coefficient::rational_value() const {
    if (!is_rational()) throw std::logic_error("Coefficient: not a rational value");
    Rational acc = 0;
    for (const auto& term : terms) acc += term.factor;
    return acc;
}

Real Expansion::evaluate(const Real& n, int num_terms) const {
    size_t count = num_terms < 0 ? entries.size()
                                 : std::min(entries.size(), static_cast<size_t>(num_terms));
    Real acc = 0;
    for (size_t i = 0; i < count; ++i)
        acc += entries[i].coefficient.value() * pow(n, Real(entries[i].exponent2) / 2);
    return acc;
}

bool Expansion::is_rational() const {
    for (const auto& e : entries)
        if (e.exponent2 % 2 != 0 || !e.coefficient.is_rational()) return false;
    return true;
}

Rational Expansion::evaluate_exact(unsigned n, int num_terms) const {
    size_t count = num_terms < 0 ? entries.size()
                                 : std::min(entries.size(), static_cast<size_t>(num_terms));
    Rational acc = 0;
    for (size_t i = 0; i < count; ++i) {
        const auto& e = entries[i];
        if (e.exponent2 % 2 != 0 || !e.coefficient.is_rational())
            throw std::logic_error("Expansion: not exactly evaluable");
        int exp = e.exponent2 / 2;
        BigInt power = 1;
        for (int t = 0; t < (exp < 0 ? -exp : exp); ++t) power *= n;
        acc += exp >= 0 ? e.coefficient.rational_value() * power
                        : e.coefficient.rational_value() / power;
    }
    return acc;
}

namespace {

Coefficient rational_coef(const Rational& f) { return Coefficient{{{f, {}}}}; }

Coefficient mono_coef(const Rational& f, ConstMonomial m) { return Coefficient{{{f, m}}}; }

Coefficient two_term(const Rational& f1, ConstMonomial m1, const Rational& f2, ConstMonomial m2) {
    return Coefficient{{{f1, m1}, {f2, m2}}};
}

}  // namespace

Expansion expansion(Quantity quantity) {
    // Monomial shorthand: {two_half, pi_half, g_pow, zeta3_pow}
    const ConstMonomial sqrt_pi_over_2{-1, 1, 0, 0};  // sqrt(pi/2)
    const ConstMonomial sqrt_2pi{1, 1, 0, 0};         // sqrt(2 pi)
    const ConstMonomial g_sqrt_2_pi{1, -1, 1, 0};     // G sqrt(2/pi)
    const ConstMonomial sqrt_2pi3{1, 3, 0, 0};        // sqrt(2 pi^3)
    const ConstMonomial pi_sq{0, 4, 0, 0};
    const ConstMonomial g2_over_pi{0, -2, 2, 0};
    const ConstMonomial pi_cubed{0, 6, 0, 0};
    const ConstMonomial zeta3{0, 0, 0, 1};

    Expansion e;
    switch (quantity) {
        case Quantity::PTotal:
            e.entries = {
                {-1, mono_coef(Rational(1), sqrt_pi_over_2)},
                {-3, mono_coef(Rational(-5, 24), sqrt_2pi)},
                {-5, mono_coef(Rational(127, 960), sqrt_2pi)},
                {-7, mono_coef(Rational(-1571, 16128), sqrt_2pi)},
                {-9, mono_coef(Rational(-1896913, 184320), sqrt_2pi)},
            };
            e.validity = "O(n^(-11/2))";
            break;
        case Quantity::QTotal:
            e.entries = {
                {-2, rational_coef(Rational(1))},
                {-4, rational_coef(Rational(-4, 3))},
                {-6, rational_coef(Rational(88, 45))},
                {-8, rational_coef(Rational(-976, 315))},
                {-10, rational_coef(Rational(3488, 675))},
                {-12, rational_coef(Rational(-276928, 31185))},
            };
            e.validity = "O(n^(-7))";
            break;
        case Quantity::HeightMeanN0:
            e.entries = {
                {1, mono_coef(Rational(2), g_sqrt_2_pi)},
                {0, rational_coef(Rational(-1))},
                {-1, mono_coef(Rational(5, 6), g_sqrt_2_pi)},
                {-3, mono_coef(Rational(-131, 720), g_sqrt_2_pi)},
                {-5, mono_coef(Rational(1129, 12096), g_sqrt_2_pi)},
            };
            e.validity = "O(n^(-7/2))";
            break;
        case Quantity::HeightVarN0:
            e.entries = {
                {2, two_term(Rational(1, 4), pi_sq, Rational(-8), g2_over_pi)},
                {0, two_term(Rational(1, 6), pi_sq, Rational(-20, 3), g2_over_pi)},
                {-2, two_term(Rational(-1, 180), pi_sq, Rational(1, 15), g2_over_pi)},
                {-4, two_term(Rational(11, 1890), pi_sq, Rational(-53, 378), g2_over_pi)},
            };
            e.validity = "O(n^(-3))";
            break;
        case Quantity::HeightMeanZ:
            e.entries = {
                {1, mono_coef(Rational(1, 4), sqrt_2pi3)},
                {0, rational_coef(Rational(-2))},
                {-1, mono_coef(Rational(3, 16), sqrt_2pi3)},
                {-3, mono_coef(Rational(-539, 5760), sqrt_2pi3)},
                {-5, mono_coef(Rational(50713, 483840), sqrt_2pi3)},
            };
            e.validity = "O(n^(-7/2))";
            break;
        case Quantity::HeightVarZ:
            e.entries = {
                {2, two_term(Rational(7, 2), zeta3, Rational(-1, 8), pi_cubed)},
                {0, two_term(Rational(14, 3), zeta3, Rational(-3, 16), pi_cubed)},
                {-2, two_term(Rational(-28, 45), zeta3, Rational(67, 2880), pi_cubed)},
                {-4, two_term(Rational(8, 9), zeta3, Rational(-4189, 120960), pi_cubed)},
            };
            e.validity = "O(n^(-3))";
            break;
        case Quantity::BallotRatio:
            e.entries = {
                {-2, rational_coef(Rational(1, 4))},
                {-4, rational_coef(Rational(1, 6))},
                {-6, rational_coef(Rational(7, 45))},
                {-8, rational_coef(Rational(10, 63))},
                {-10, rational_coef(Rational(764, 4725))},
                {-12, rational_coef(Rational(4952, 31185))},
            };
            e.validity = "O(n^(-7))";
            break;
    }
    return e;
}

Real moment_leading(WalkDomain domain, unsigned r) {
    if (r < 1) throw std::domain_error("moment_leading: requires r >= 1");
    if (domain == WalkDomain::ReflectiveN0) {
        return pow(Real(2), Real(r) / 2 + 2) / hp::pi<Real>() *
               special::gamma_half<Real>(r + 2) * special::dirichlet_beta<Real>(r + 1);
    }
    return Real(r) / hp::sqrt_pi<Real>() * special::gamma_half<Real>(r + 1) *
           (pow(Real(2), int(r) + 1) - 1) * pow(Real(2), -Real(r) / 2) *
           special::zeta<Real>(r + 1);
}

// ---------------------------------------------------------------------
// Limiting densities.

namespace {

constexpr double kThetaCut = 1e-35;  // relative term cutoff, two-miss lookahead

template <class TermFn>
Real theta_sum(TermFn term) {
    Real acc = 0, peak = 0;
    unsigned misses = 0;
    for (unsigned k = 0; misses < 2; ++k) {
        Real t = term(k);
        Real mag = abs(t);
        peak = std::max(peak, mag);
        if (mag < Real(kThetaCut) * std::max(peak, Real("1e-300")))
            ++misses;
        else
            misses = 0;
        acc += t;
    }
    return acc;
}

}  // namespace

Real density(WalkDomain domain, const Real& eta, ThetaForm form) {
    if (eta <= 0) throw std::domain_error("density: requires eta > 0");
    const Real pi = hp::pi<Real>();
    if (domain == WalkDomain::ReflectiveN0) {
        if (form == ThetaForm::GaussianSide) {
            // phi(eta) = 4 eta/pi sum (-1)^k (2k+1) exp(-(2k+1)^2 eta^2/2)
            return 4 * eta / pi * theta_sum([&](unsigned k) {
                       Real odd = Real(2 * k + 1);
                       Real t = odd * exp(-odd * odd * eta * eta / 2);
                       return k % 2 == 0 ? t : -t;
                   });
        }
        // phi(eta) = sqrt(2 pi)/eta^2 sum (-1)^k (2k+1) exp(-pi^2 (2k+1)^2/(8 eta^2))
        return sqrt(2 * pi) / (eta * eta) * theta_sum([&](unsigned k) {
                   Real odd = Real(2 * k + 1);
                   Real t = odd * exp(-pi * pi * odd * odd / (8 * eta * eta));
                   return k % 2 == 0 ? t : -t;
               });
    }
    if (form == ThetaForm::GaussianSide) {
        // chi(eta) = 2 sqrt(2)/sqrt(pi) sum ((2k+1)^2 eta^2 - 1) exp(-(2k+1)^2 eta^2/2)
        return 2 * sqrt(Real(2)) / hp::sqrt_pi<Real>() * theta_sum([&](unsigned k) {
                   Real odd = Real(2 * k + 1);
                   Real z = odd * odd * eta * eta;
                   return (z - 1) * exp(-z / 2);
               });
    }
    // chi(eta) = 2 pi^2/eta^3 sum_{k>=1} (-1)^(k-1) k^2 exp(-pi^2 k^2/(2 eta^2))
    return 2 * pi * pi / (eta * eta * eta) * theta_sum([&](unsigned k0) {
               Real k = Real(k0 + 1);
               Real t = k * k * exp(-pi * pi * k * k / (2 * eta * eta));
               return k0 % 2 == 0 ? t : -t;
           });
}

std::pair<Real, Real> local_limit_window(WalkDomain domain, unsigned n) {
    if (n < 2) throw std::domain_error("local_limit_window: requires n >= 2");
    Real root_log = sqrt(log(Real(n)));
    Real lo = (domain == WalkDomain::ReflectiveN0 ? Real(3) : Real(6)) / root_log;
    return {lo, root_log / 2};
}

LocalLimit local_limit_approx(WalkDomain domain, unsigned n, unsigned h) {
    if (n < 1) throw std::domain_error("local_limit_approx: requires n >= 1");
    LocalLimit out{Real(0), false, false};
    if (h > n || h % 2 != n % 2 || h == 0) return out;
    out.possible = true;
    Real root_n = sqrt(Real(n));
    Real eta = Real(h) / root_n;
    out.value = 2 * density(domain, eta, ThetaForm::GaussianSide) / root_n;
    if (n >= 2) {
        auto [lo, hi] = local_limit_window(domain, n);
        out.in_window = eta > lo && eta < hi;
    }
    return out;
}

}  // namespace maxwalk::asym
