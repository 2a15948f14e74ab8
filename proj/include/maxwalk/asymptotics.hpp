#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxwalk/bigint.hpp"
#include "maxwalk/hp.hpp"
#include "maxwalk/walks.hpp"

namespace maxwalk::asym {

using hp::Real;
using walks::WalkDomain;

// Half-integers m in {1/2, 1, 3/2, ...}, stored as 2m.
struct HalfInt {
    int twice = 2;

    static HalfInt from_twice(int t) { return HalfInt{t}; }
    static HalfInt of(int whole) { return HalfInt{2 * whole}; }
    bool is_integer() const { return twice % 2 == 0; }

    template <class R = Real>
    R value() const {
        return R(twice) / 2;
    }
};

// Coefficients d_r of the higher-order factorial approximation
// n! ~ sqrt(2 pi n) (n/e)^n sum_r d_r n^(-r), exact rationals.
Rational stirling_d(unsigned r);

// Coefficients c_{l j} of the correction series S(alpha, n) in the shifted
// central binomial approximation; c_{l j} = 0 for j > 2l/3.
Rational binom_c(unsigned l, unsigned j);

// C(2n, n-alpha) ~ 4^n/sqrt(n pi) exp(-alpha^2/n) S(alpha, n) with S
// truncated at total order L (rows alpha^(2j)/n^l with l <= L kept, so
// L = 0 gives the bare S = 1 form). Requires n - alpha integral and the
// shift inside the validity window.
Real central_binom_approx(HalfInt n, HalfInt alpha, unsigned L);

struct MellinCheck {
    Real lhs;  // direct truncated summation
    Real rhs;  // closed main term
    Real rel_gap() const {
        Real scale = std::max(abs(lhs), abs(rhs));
        return scale == 0 ? abs(lhs - rhs) : abs(lhs - rhs) / scale;
    }
};

// sum over the parity class h+1 == 2m (mod 2) of
// (-1)^k tau^(2j+1) (h+1)^r exp(-tau^2/m) against its closed main term
// 2^(r-1) Gamma(j+1+r/2) beta(r+1) m^(j+1+r/2).
MellinCheck mellin_T(unsigned j, unsigned r, HalfInt m);

enum class UCase { Zero, LogCase, PowerCase };

// sum over h == 2m (mod 2) of ((2 upsilon^2 - m)/m) upsilon^(2j) (h+2)^r
// exp(-upsilon^2/m) against the closed main term of the matching case:
// Zero (j = r = 0), LogCase (j >= 1, r = 0, log-bearing double pole),
// PowerCase (r >= 1, two single poles with the parity-dependent kappa).
MellinCheck mellin_U(UCase c, unsigned j, unsigned r, HalfInt m);

// A product of the constants appearing in the printed coefficients:
// 2^(two_half/2) pi^(pi_half/2) G^g zeta(3)^z.
struct ConstMonomial {
    int two_half = 0;
    int pi_half = 0;
    int g_pow = 0;
    int zeta3_pow = 0;
};

// Exact symbolic coefficient: sum of rational multiples of monomials.
struct Coefficient {
    struct Term {
        Rational factor;
        ConstMonomial mono;
    };
    std::vector<Term> terms;

    Real value() const;
    bool is_rational() const;
    Rational rational_value() const;  // only when is_rational()
};

// One asymptotic series, exponents strictly decreasing half-integers.
struct Expansion {
    struct Entry {
        int exponent2;  // twice the exponent of n
        Coefficient coefficient;
    };
    std::vector<Entry> entries;
    std::string validity;  // order of the first omitted term

    Real evaluate(const Real& n, int num_terms = -1) const;
    bool is_rational() const;
    Rational evaluate_exact(unsigned n, int num_terms = -1) const;
};

enum class Quantity {
    PTotal,        // admissibility probability on N0
    QTotal,        // admissibility probability on Z
    HeightMeanN0,  // expected height, N0
    HeightVarN0,   // height variance, N0
    HeightMeanZ,   // expected height, Z
    HeightVarZ,    // height variance, Z
    BallotRatio,   // B_n / 2^n
};

// The printed expansions, with coefficients stored symbolically.
Expansion expansion(Quantity quantity);

// Leading coefficient of the r-th raw height moment, r >= 1:
// N0: 2^(r/2+2)/pi Gamma(r/2+1) beta(r+1); Z: r/sqrt(pi) Gamma((r+1)/2)
// (2^(r+1)-1) 2^(-r/2) zeta(r+1). The moment itself grows like n^(r/2).
Real moment_leading(WalkDomain domain, unsigned r);

enum class ThetaForm { GaussianSide, DualSide };

// Limiting height density phi (N0) or chi (Z) at eta = h/sqrt(n), through
// either theta representation; both integrate to 1. The local limit
// approximation to P(height = h) is 2 density(eta)/sqrt(n).
Real density(WalkDomain domain, const Real& eta, ThetaForm form);

struct LocalLimit {
    Real value;      // 2 density(h/sqrt(n))/sqrt(n), or 0 when impossible
    bool in_window;  // eta inside the stated validity window
    bool possible;   // parity matches and h <= n
};

LocalLimit local_limit_approx(WalkDomain domain, unsigned n, unsigned h);

// The stated validity window for eta = h/sqrt(n): lower bound 3/sqrt(log n)
// on N0 and 6/sqrt(log n) on Z, upper bound sqrt(log n)/2 for both.
std::pair<Real, Real> local_limit_window(WalkDomain domain, unsigned n);

}  // namespace maxwalk::asym
