#pragma once

#include <string>

namespace maxwalk::figure {

// CSV with header "n,exact,asy" and one row per n in [2, max_n]:
// exact = B_n/2^n from the big-integer sums, asy = the six-term series,
// both as plain decimals with 12 significant digits.
std::string ballot_cmp_csv(unsigned max_n);

}  // namespace maxwalk::figure
