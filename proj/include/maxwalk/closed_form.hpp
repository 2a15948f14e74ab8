#pragma once

#include "maxwalk/bigint.hpp"
#include "maxwalk/walks.hpp"

namespace maxwalk::closed_form {

using walks::HeightSpectrum;
using walks::WalkDomain;

// Index sequences of the explicit sums: tau = (h+1)(2k+1)/2 for the N0
// family, upsilon = (h+2)(2k+1)/2 for the Z family.
Rational tau(unsigned h, unsigned k);
Rational upsilon(unsigned h, unsigned k);

// Probability that a length-n walk on N0 is admissible of height h,
// as an alternating finite sum over shifted central binomials. The sums
// are evaluated with the half-integer bookkeeping cleared to integers:
// p_n^(h) = sum_k (-1)^k (h+1)(2k+1) C(n+1, (n+1-(h+1)(2k+1))/2)
//           / (2^(n-1) (n+1)).
// Requires n >= 1 (out of validity below that).
Rational p_height(unsigned n, unsigned h);

// Z-family analogue, valid for n >= 0:
// q_n^(h) = sum_k ((h+2)^2(2k+1)^2 - (n+2)) C(n+2, (n+2-(h+2)(2k+1))/2)
//           / (2^n (n+1)(n+2)).
Rational q_height(unsigned n, unsigned h);

// Full spectra and totals; one shared binomial row per call, so lengths in
// the thousands stay fast. p_spectrum(0) is the convention {0: 1}.
HeightSpectrum p_spectrum(unsigned n);
HeightSpectrum q_spectrum(unsigned n);
Rational p_total(unsigned n);
Rational q_total(unsigned n);

HeightSpectrum spectrum(unsigned n, WalkDomain domain);
Rational total(unsigned n, WalkDomain domain);

// sum_h (h+shift)^r entries[h] / total over the closed-form spectrum.
Rational shifted_moment(unsigned n, WalkDomain domain, unsigned r, unsigned shift);

// Number of non-vanishing (h, k) terms visited by the last spectrum
// evaluation path for length n; exposed for the term-count bound tests.
unsigned long term_count(unsigned n, WalkDomain domain);

}  // namespace maxwalk::closed_form
