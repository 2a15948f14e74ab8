#pragma once

#include <vector>

#include "maxwalk/bigint.hpp"
#include "maxwalk/walks.hpp"

namespace maxwalk::cheb {

using walks::HeightSpectrum;
using walks::WalkDomain;

enum class Kind { T, U };

// Dense integer-coefficient polynomial, coefficient index = degree.
struct IntPolynomial {
    std::vector<BigInt> coeff;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    BigInt at(unsigned d) const { return d < coeff.size() ? coeff[d] : BigInt(0); }
    bool operator==(const IntPolynomial&) const = default;

    template <class R>
    R eval(const R& x) const {
        R acc = 0;
        for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + R(coeff[i]);
        return acc;
    }
};

// T_h or U_h by the three-term recurrence, exact coefficients.
IntPolynomial cheb_poly(Kind kind, unsigned h);

// 2 [z^(n+1)] 1/P_{h+1}(1/z) with P = T (heights on N0) or P = U (heights
// on Z). The pole is cleared by multiplying through with z^(h+1), then the
// resulting power series is inverted over exact rationals. Kind T requires
// n >= 1.
Rational gf_coefficient(Kind kind, unsigned h, unsigned n);

// Batch form: values for n = 0..n_max at fixed h (one shared inversion).
// For kind T the n = 0 slot is meaningless and set to 0.
std::vector<Rational> gf_coefficients(Kind kind, unsigned h, unsigned n_max);

// Whole spectrum of a given length through the series route.
HeightSpectrum height_spectrum_series(unsigned n, WalkDomain domain);

// Coefficients of det(I - z M_h) (FreeZ) or det(I - z Mtilde_h)
// (ReflectiveN0), built from the row-expansion recurrence
// D_{h+2} = D_{h+1} - (z^2/4) D_h.
std::vector<Rational> det_poly(unsigned h, WalkDomain domain);

// Checks 2^(h+1) det(I - z M_h) == z^(h+1) U_{h+1}(1/z) resp.
// 2^h det(I - z Mtilde_h) == z^(h+1) T_{h+1}(1/z), as exact polynomials.
bool det_identity_check(unsigned h, WalkDomain domain);

}  // namespace maxwalk::cheb
