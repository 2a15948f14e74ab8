#include "maxwalk/figure.hpp"

#include <sstream>
#include <stdexcept>

#include "maxwalk/asymptotics.hpp"
#include "maxwalk/closed_form.hpp"
#include "maxwalk/format.hpp"

namespace maxwalk::figure {

std::string ballot_cmp_csv(unsigned max_n) {
    if (max_n < 2) throw std::domain_error("ballot_cmp_csv: requires max_n >= 2");
    auto series = asym::expansion(asym::Quantity::BallotRatio);
    std::ostringstream out;
    out << "n,exact,asy\n";
    for (unsigned n = 2; n <= max_n; ++n) {
        Rational exact = closed_form::q_total(n - 2) / 4;  // B_n / 2^n
        Rational approx = series.evaluate_exact(n);
        out << n << ',' << decimal_str(exact, 12) << ',' << decimal_str(approx, 12) << '\n';
    }
    return out.str();
}

}  // namespace maxwalk::figure
