#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "maxwalk/special.hpp"

using namespace maxwalk;
using hp::Real;
using hp::Real100;
using special::KappaFamily;
using special::MParity;

namespace {

// Published digit strings used as independent pins.
const Real kCatalan("0.91596559417721901505460351493238411077414937428167");
const Real kZeta3("1.20205690315959428539973816151144999076498629234050");

Real rel_diff(const Real& a, const Real& b) {
    Real scale = std::max(abs(a), abs(b));
    return scale == 0 ? abs(a - b) : abs(a - b) / scale;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(special::bernoulli(0) == 1);
    CHECK(special::bernoulli(1) == Rational(-1, 2));
    CHECK(special::bernoulli(2) == Rational(1, 6));
    CHECK(special::bernoulli(3) == 0);
    CHECK(special::bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("dirichlet beta at small integers") {
    CHECK(rel_diff(special::dirichlet_beta<Real>(1), hp::pi<Real>() / 4) < Real("1e-45"));
    CHECK(rel_diff(special::dirichlet_beta<Real>(2), kCatalan) < Real("1e-45"));
    CHECK(rel_diff(special::dirichlet_beta<Real>(3), pow(hp::pi<Real>(), 3) / 32) < Real("1e-45"));
    CHECK_THROWS_AS(special::dirichlet_beta<Real>(0), std::domain_error);
}

TEST_CASE("beta(2) against an independently accelerated series") {
    // Hurwitz-zeta route: beta(s) = 4^(-s) (zeta(s,1/4) - zeta(s,3/4)),
    // summed by Euler-Maclaurin rather than by the alternating scheme.
    for (int s = 2; s <= 4; ++s) {
        Real via_hurwitz = (special::hurwitz_zeta<Real>(s, Rational(1, 4)) -
                            special::hurwitz_zeta<Real>(s, Rational(3, 4))) /
                           pow(Real(4), s);
        CHECK(rel_diff(special::dirichlet_beta<Real>(s), via_hurwitz) < Real("1e-40"));
    }
    // and the boost constant as a third, external route
    CHECK(rel_diff(special::catalan<Real>(), boost::math::constants::catalan<Real>()) < Real("1e-45"));
}

TEST_CASE("zeta at integers") {
    CHECK(rel_diff(special::zeta<Real>(2), pow(hp::pi<Real>(), 2) / 6) < Real("1e-45"));
    CHECK(special::zeta<Real>(0) == Real(-0.5));
    CHECK(rel_diff(special::zeta<Real>(-1), Real(-1) / 12) < Real("1e-45"));
    CHECK(special::zeta<Real>(-2) == 0);
    CHECK(rel_diff(special::zeta<Real>(3), kZeta3) < Real("1e-45"));
    CHECK_THROWS_AS(special::zeta<Real>(1), std::domain_error);

    // two independent routes for the odd value
    CHECK(rel_diff(special::zeta<Real>(3), special::hurwitz_zeta<Real>(3, Rational(1))) < Real("1e-40"));
    // and boost's implementation as an external check
    for (int s : {2, 3, 4, 5, 7}) {
        CHECK(rel_diff(special::zeta<Real>(s), boost::math::zeta(Real(s))) < Real("1e-40"));
    }
}

TEST_CASE("gamma at half-integers") {
    CHECK(rel_diff(special::gamma_half<Real>(1), hp::sqrt_pi<Real>()) < Real("1e-45"));
    CHECK(rel_diff(special::gamma_half<Real>(5), 3 * hp::sqrt_pi<Real>() / 4) < Real("1e-45"));
    CHECK(special::gamma_half<Real>(6) == 2);  // Gamma(3) = 2
    CHECK_THROWS_AS(special::gamma_half<Real>(0), std::domain_error);
    for (int twice = 1; twice <= 13; ++twice) {
        Real mine = special::gamma_half<Real>(twice);
        Real boost_val = boost::math::tgamma(Real(twice) / 2);
        CHECK(rel_diff(mine, boost_val) < Real("1e-40"));
    }
}

TEST_CASE("digamma at half-integers") {
    Real psi_3_2 = special::digamma_half<Real>(3);
    Real expected = 2 - hp::euler_gamma<Real>() - 2 * hp::ln2<Real>();
    CHECK(rel_diff(psi_3_2, expected) < Real("1e-45"));
    CHECK(rel_diff(special::digamma_half<Real>(2), -hp::euler_gamma<Real>()) < Real("1e-45"));
    for (int twice = 1; twice <= 13; ++twice) {
        Real mine = special::digamma_half<Real>(twice);
        Real boost_val = boost::math::digamma(Real(twice) / 2);
        CHECK(rel_diff(mine, boost_val) < Real("1e-40"));
    }
}

TEST_CASE("kappa branches") {
    CHECK(rel_diff(special::kappa<Real>(KappaFamily::U, MParity::Integer, 0), Real(-0.5)) < Real("1e-45"));
    CHECK(rel_diff(special::kappa<Real>(KappaFamily::U, MParity::HalfInteger, 0), Real(-1)) < Real("1e-45"));
    CHECK(rel_diff(special::kappa<Real>(KappaFamily::T, MParity::Integer, 2),
                   pow(hp::pi<Real>(), 2) / 24) < Real("1e-45"));
    // direct summation over the parity class as oracle, s = 3
    Real t_int = 0, t_half = 0, u_half = 0;
    for (int h = 0; h < 4000; ++h) {
        if (h % 2 == 1) t_int += 1 / pow(Real(h + 1), 3);   // h+1 even
        if (h % 2 == 0) t_half += 1 / pow(Real(h + 1), 3);  // h+1 odd
        if (h % 2 == 1) u_half += 1 / pow(Real(h + 2), 3);  // h odd
    }
    // truncation of the direct sums is only ~1e-7; that is enough to pin
    // the branch selection
    CHECK(abs(special::kappa<Real>(KappaFamily::T, MParity::Integer, 3) - t_int) < Real("1e-6"));
    CHECK(abs(special::kappa<Real>(KappaFamily::T, MParity::HalfInteger, 3) - t_half) < Real("1e-6"));
    CHECK(abs(special::kappa<Real>(KappaFamily::U, MParity::HalfInteger, 3) - u_half) < Real("1e-6"));
    CHECK_THROWS_AS(special::kappa<Real>(KappaFamily::T, MParity::Integer, 1), std::domain_error);
}

TEST_CASE("beta functional equation consequences") {
    // beta(1-s) = (pi/2)^(-s) sin(pi s/2) Gamma(s) beta(s); at s = 2, 3, 4
    // the right side must reproduce beta(-1) = 0, beta(-2) = -1/2,
    // beta(-3) = 0 (zeros at the negative odd integers).
    auto rhs = [](int s) {
        Real half_pi = hp::pi<Real>() / 2;
        return pow(half_pi, -s) * sin(half_pi * s) * special::gamma_half<Real>(2 * s) *
               special::dirichlet_beta<Real>(s);
    };
    CHECK(abs(rhs(2)) < Real("1e-12"));
    CHECK(abs(rhs(3) + Real(0.5)) < Real("1e-12"));
    CHECK(abs(rhs(4)) < Real("1e-12"));
}

TEST_CASE("doubling the precision changes no guaranteed digit") {
    auto agree = [](const Real& low, const Real100& high) {
        Real100 diff = abs(Real100(low) - high);
        Real100 scale = high == 0 ? Real100(1) : abs(high);
        return diff / scale < Real100("1e-29");
    };
    CHECK(agree(special::dirichlet_beta<Real>(2), special::dirichlet_beta<Real100>(2)));
    CHECK(agree(special::zeta<Real>(3), special::zeta<Real100>(3)));
    CHECK(agree(special::gamma_half<Real>(7), special::gamma_half<Real100>(7)));
    CHECK(agree(special::digamma_half<Real>(5), special::digamma_half<Real100>(5)));
    CHECK(agree(special::kappa<Real>(KappaFamily::U, MParity::HalfInteger, 2),
                special::kappa<Real100>(KappaFamily::U, MParity::HalfInteger, 2)));
    CHECK(agree(special::hurwitz_zeta<Real>(2, Rational(1, 4)),
                special::hurwitz_zeta<Real100>(2, Rational(1, 4))));
}
