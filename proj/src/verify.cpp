#include "maxwalk/verify.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "maxwalk/asymptotics.hpp"
#include "maxwalk/chebyshev.hpp"
#include "maxwalk/closed_form.hpp"
#include "maxwalk/figure.hpp"
#include "maxwalk/format.hpp"
#include "maxwalk/special.hpp"
#include "maxwalk/walks.hpp"

namespace maxwalk::verify {

using asym::HalfInt;
using asym::Quantity;
using asym::ThetaForm;
using asym::UCase;
using hp::Real;
using walks::HeightSpectrum;
using walks::WalkDomain;

namespace {

std::string num(const Real& v, int sig = 6) { return compact_str(v, sig); }

// -----------------------------------------------------------------
// criterion 1: per-height equality of all four exact engines, n <= 16

CheckResult check_four_way() {
    CheckResult result{"1 four-way oracle equivalence (n <= 16, both domains)", true, ""};
    for (unsigned n = 0; n <= 16 && result.pass; ++n) {
        for (auto domain : {WalkDomain::ReflectiveN0, WalkDomain::FreeZ}) {
            auto paths = walks::enumerate_admissible(n, domain);
            auto grouped = walks::spectrum_from_paths(n, domain, paths);
            auto dp = walks::height_spectrum_dp(n, domain);
            auto closed = closed_form::spectrum(n, domain);
            bool same = grouped.entries == dp.entries && dp.entries == closed.entries &&
                        grouped.total == dp.total && dp.total == closed.total;
            // the T-series route starts at n = 1
            if (same && !(domain == WalkDomain::ReflectiveN0 && n == 0)) {
                auto series = cheb::height_spectrum_series(n, domain);
                same = series.entries == dp.entries && series.total == dp.total;
            }
            if (!same) {
                result.pass = false;
                result.detail = "first mismatch at n = " + std::to_string(n);
                break;
            }
        }
    }
    if (result.pass)
        result.detail = "enumeration, transfer matrix, reciprocal series and explicit sums identical";
    return result;
}

// -----------------------------------------------------------------
// criterion 2: ballot bijection vs direct string counting, figure values

CheckResult check_ballot_bijection() {
    CheckResult result{"2 ballot identity and brute force (2 <= n <= 20)", true, ""};
    for (unsigned n = 2; n <= 20; ++n) {
        if (walks::ballot_count(n) != walks::ballot_count_bruteforce(n)) {
            result.pass = false;
            result.detail = "mismatch at n = " + std::to_string(n);
            return result;
        }
    }
    if (walks::extremal_count(3) != 6) {
        result.pass = false;
        result.detail = "extremal_count(3) != 6";
        return result;
    }
    auto paths = walks::enumerate_admissible(5, WalkDomain::ReflectiveN0);
    std::multiset<unsigned> heights;
    for (const auto& wp : paths) heights.insert(wp.height);
    if (heights != std::multiset<unsigned>{1, 3, 3, 3, 5}) {
        result.pass = false;
        result.detail = "length-5 height multiset is not {1,3,3,3,5}";
        return result;
    }
    result.detail = "walk counts equal string counts; extremal and length-5 values match";
    return result;
}

// -----------------------------------------------------------------
// criteria 3/4: remainder-ratio bands against the exact values

Rational abs_rational(Rational v) { return v < 0 ? Rational(-v) : v; }

Rational ballot_residual(unsigned n) {
    Rational exact = closed_form::q_total(n - 2) / 4;
    return abs_rational(exact - asym::expansion(Quantity::BallotRatio).evaluate_exact(n));
}

Rational q_residual(unsigned n) {
    return abs_rational(closed_form::q_total(n) -
                        asym::expansion(Quantity::QTotal).evaluate_exact(n));
}

Real p_residual(unsigned n, int terms) {
    return abs(hp::to_real(closed_form::p_total(n)) -
               asym::expansion(Quantity::PTotal).evaluate(Real(n), terms));
}

CheckResult check_ballot_scaling() {
    CheckResult result{"3 ballot-series remainder scaling and third coefficient", true, ""};
    const Real lo = Real("0.4") / 128, hi = Real("2.5") / 128;
    Real ratio = hp::to_real(ballot_residual(256)) / hp::to_real(ballot_residual(128));
    bool band_ok = ratio > lo && ratio < hi;

    // two-term residual scaled by n^3 against the third coefficient 7/45
    const unsigned n = 512;
    Rational two_terms = Rational(1, 4 * BigInt(n)) + Rational(1, 6 * BigInt(n) * n);
    Real scaled = hp::to_real(abs_rational(closed_form::q_total(n - 2) / 4 - two_terms)) *
                  pow(Real(n), 3);
    Real third = Real(7) / 45;
    bool third_ok = abs(scaled - third) <= Real("0.25") * third;

    result.pass = band_ok && third_ok;
    result.detail = "E(256)/E(128) = " + num(ratio) + " vs band [" + num(lo) + ", " + num(hi) +
                    "]" + (band_ok ? "" : " MISS") + "; n^3-scaled two-term residual at 512 = " +
                    num(scaled) + " vs 7/45 = " + num(third) + (third_ok ? "" : " MISS");
    return result;
}

CheckResult check_expansion_scaling() {
    CheckResult result{"4 probability-series remainder scaling", true, ""};
    const Real q_lo = Real("0.4") / 128, q_hi = Real("2.5") / 128;
    Real q_ratio = hp::to_real(q_residual(256)) / hp::to_real(q_residual(128));
    bool q_ok = q_ratio > q_lo && q_ratio < q_hi;

    const Real p_scale = pow(Real(2), Real(-11) / 2);
    const Real p_lo = Real("0.4") * p_scale, p_hi = Real("2.5") * p_scale;
    Real p_ratio = p_residual(400, -1) / p_residual(200, -1);
    Real p_ratio_short = p_residual(400, 4) / p_residual(200, 4);
    bool p_ok = p_ratio > p_lo && p_ratio < p_hi;

    result.pass = q_ok && p_ok;
    result.detail = "q: E(256)/E(128) = " + num(q_ratio) + " vs [" + num(q_lo) + ", " + num(q_hi) +
                    "]" + (q_ok ? "" : " MISS") + "; p: E(400)/E(200) = " + num(p_ratio) + " vs [" +
                    num(p_lo) + ", " + num(p_hi) + "]" + (p_ok ? "" : " MISS") +
                    " (4-term variant " + num(p_ratio_short) + ")";
    return result;
}

// -----------------------------------------------------------------
// criterion 5: direct sums against the closed main terms

CheckResult check_mellin() {
    CheckResult result{"5 harmonic-sum main terms at m in {25, 25.5, 49, 100}", true, ""};
    const Real tol("1e-6");
    Real worst = 0;
    std::string worst_name;
    unsigned misses = 0, total = 0;
    auto record = [&](const std::string& name, const asym::MellinCheck& check) {
        ++total;
        Real gap = check.rel_gap();
        if (gap >= tol) ++misses;
        if (gap > worst) {
            worst = gap;
            worst_name = name;
        }
    };
    for (int twice : {50, 51, 98, 200}) {
        HalfInt m = HalfInt::from_twice(twice);
        std::string tag = "2m=" + std::to_string(twice);
        for (unsigned j = 0; j <= 2; ++j)
            for (unsigned r = 0; r <= 2; ++r)
                record("T(" + std::to_string(j) + "," + std::to_string(r) + ") " + tag,
                       asym::mellin_T(j, r, m));
        record("U-zero " + tag, asym::mellin_U(UCase::Zero, 0, 0, m));
        for (unsigned j = 1; j <= 2; ++j)
            record("U-log(" + std::to_string(j) + ") " + tag, asym::mellin_U(UCase::LogCase, j, 0, m));
        for (unsigned j = 0; j <= 2; ++j)
            for (unsigned r = 1; r <= 2; ++r)
                record("U-pow(" + std::to_string(j) + "," + std::to_string(r) + ") " + tag,
                       asym::mellin_U(UCase::PowerCase, j, r, m));
    }
    result.pass = misses == 0;
    result.detail = std::to_string(misses) + "/" + std::to_string(total) +
                    " gaps above 1e-6; worst " + num(worst) + " at " + worst_name +
                    (result.pass ? "" : " (remainders at these m are transient-dominated)");
    return result;
}

// -----------------------------------------------------------------
// criterion 6: both theta representations agree

CheckResult check_theta_duality() {
    CheckResult result{"6 theta duality on eta in [0.4, 4.0] step 0.05", true, ""};
    Real worst = 0;
    for (auto domain : {WalkDomain::ReflectiveN0, WalkDomain::FreeZ}) {
        for (int i = 0; i <= 72; ++i) {
            Real eta = Real(40 + 5 * i) / 100;
            Real gauss = asym::density(domain, eta, ThetaForm::GaussianSide);
            Real dual = asym::density(domain, eta, ThetaForm::DualSide);
            Real diff = abs(gauss - dual) / std::max(Real(1), abs(gauss));
            worst = std::max(worst, diff);
        }
    }
    result.pass = worst <= Real("1e-10");
    result.detail = "worst normalized representation gap " + num(worst);
    return result;
}

// -----------------------------------------------------------------
// criterion 7: local limit accuracy and trend

struct WindowScan {
    Real worst = 0;
    unsigned count = 0;
};

WindowScan scan_window(WalkDomain domain, unsigned n, const Real& lo, const Real& hi) {
    WindowScan scan;
    auto spectrum = closed_form::spectrum(n, domain);
    Real root_n = sqrt(Real(n));
    for (unsigned h = 2 - n % 2; h <= n; h += 2) {
        Real eta = Real(h) / root_n;
        if (eta <= lo || eta >= hi) continue;
        ++scan.count;
        Real exact = hp::to_real(spectrum.at(h) / spectrum.total);
        Real approx = 2 * asym::density(domain, eta, ThetaForm::GaussianSide) / root_n;
        scan.worst = std::max(scan.worst, abs(approx - exact) / exact);
    }
    return scan;
}

CheckResult check_local_limit() {
    CheckResult result{"7 local limit theorems at n = 1024 and 4096", true, ""};
    std::ostringstream detail;
    // N0: the stated window is usable at these sizes
    auto [n0_lo_1k, n0_hi_1k] = asym::local_limit_window(WalkDomain::ReflectiveN0, 1024);
    auto [n0_lo_4k, n0_hi_4k] = asym::local_limit_window(WalkDomain::ReflectiveN0, 4096);
    auto n0_small = scan_window(WalkDomain::ReflectiveN0, 1024, n0_lo_1k, n0_hi_1k);
    auto n0_large = scan_window(WalkDomain::ReflectiveN0, 4096, n0_lo_4k, n0_hi_4k);
    bool n0_ok = n0_small.worst < Real("0.15") && n0_large.worst < n0_small.worst &&
                 n0_small.count > 0 && n0_large.count > 0;
    detail << "N0 worst " << num(n0_small.worst) << " -> " << num(n0_large.worst)
           << (n0_ok ? "" : " MISS");

    // Z: the stated window needs log n > 12, empty at both sizes
    auto [z_lo_1k, z_hi_1k] = asym::local_limit_window(WalkDomain::FreeZ, 1024);
    auto [z_lo_4k, z_hi_4k] = asym::local_limit_window(WalkDomain::FreeZ, 4096);
    auto z_small = scan_window(WalkDomain::FreeZ, 1024, z_lo_1k, z_hi_1k);
    auto z_large = scan_window(WalkDomain::FreeZ, 4096, z_lo_4k, z_hi_4k);
    bool z_ok = z_small.count > 0 && z_large.count > 0 && z_small.worst < Real("0.15") &&
                z_large.worst < z_small.worst;
    detail << "; Z stated window holds " << z_small.count << "/" << z_large.count << " heights";
    if (z_small.count == 0) {
        // informational: the same scan just below the validity threshold
        auto info_small = scan_window(WalkDomain::FreeZ, 1024, n0_lo_1k, n0_hi_1k);
        auto info_large = scan_window(WalkDomain::FreeZ, 4096, n0_lo_4k, n0_hi_4k);
        detail << " (empty below n ~ 1.6e5; just below threshold: " << num(info_small.worst)
               << " -> " << num(info_large.worst) << ")";
    }
    if (!z_ok) detail << " MISS";
    result.pass = n0_ok && z_ok;
    result.detail = detail.str();
    return result;
}

// -----------------------------------------------------------------
// criterion 8: moments and constants

CheckResult check_moments() {
    CheckResult result{"8 moment constants at n = 1024 and beta(2)", true, ""};
    Real mean_ratio = hp::to_real(walks::exact_shifted_moment(1024, WalkDomain::ReflectiveN0, 1, 0)) / 32;
    Real mean_lead = asym::moment_leading(WalkDomain::ReflectiveN0, 1);
    Real mean_dev = abs(mean_ratio - mean_lead) / mean_lead;
    bool mean_ok = mean_dev < Real("0.05");

    Rational m1 = walks::exact_shifted_moment(1024, WalkDomain::FreeZ, 1, 0);
    Rational m2 = walks::exact_shifted_moment(1024, WalkDomain::FreeZ, 2, 0);
    Real var_ratio = hp::to_real(m2 - m1 * m1) / 1024;
    Real var_lead = (28 * special::zeta<Real>(3) - pow(hp::pi<Real>(), 3)) / 8;
    Real var_dev = abs(var_ratio - var_lead) / var_lead;
    bool var_ok = var_dev < Real("0.07");

    Real beta2 = special::dirichlet_beta<Real>(2);
    Real beta2_indep = (special::hurwitz_zeta<Real>(2, Rational(1, 4)) -
                        special::hurwitz_zeta<Real>(2, Rational(3, 4))) /
                       16;
    bool beta_ok = abs(beta2 - beta2_indep) / beta2_indep < Real("1e-10");

    result.pass = mean_ok && var_ok && beta_ok;
    result.detail = "mean/sqrt(n) dev " + num(mean_dev) + (mean_ok ? "" : " MISS") +
                    "; var/n dev " + num(var_dev) + (var_ok ? "" : " MISS") +
                    "; beta(2) routes agree to " + num(abs(beta2 - beta2_indep), 3);
    return result;
}

// -----------------------------------------------------------------
// criterion 9: figure data reproduction

CheckResult check_figure() {
    CheckResult result{"9 ballot comparison CSV (max n = 50)", true, ""};
    std::string csv = figure::ballot_cmp_csv(50);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    if (line != "n,exact,asy") {
        result.pass = false;
        result.detail = "bad header: " + line;
        return result;
    }
    auto series = asym::expansion(Quantity::BallotRatio);
    unsigned rows = 0;
    for (unsigned n = 2; n <= 50; ++n) {
        if (!std::getline(in, line)) break;
        ++rows;
        auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        std::string n_str = line.substr(0, c1);
        std::string exact_str = line.substr(c1 + 1, c2 - c1 - 1);
        std::string asy_str = line.substr(c2 + 1);
        Rational exact = closed_form::q_total(n - 2) / 4;
        if (n_str != std::to_string(n) || exact_str != decimal_str(exact, 12) ||
            asy_str != decimal_str(series.evaluate_exact(n), 12)) {
            result.pass = false;
            result.detail = "row mismatch at n = " + std::to_string(n);
            return result;
        }
        // spot values pinned by the independent string counter
        if (n == 4 || n == 5) {
            Rational brute(walks::ballot_count_bruteforce(n), pow2(n));
            if (exact != brute || (n == 4 && exact_str != "0.0625000000000") ||
                (n == 5 && exact != Rational(1, 16))) {
                result.pass = false;
                result.detail = "spot value mismatch at n = " + std::to_string(n);
                return result;
            }
        }
    }
    if (rows != 49) {
        result.pass = false;
        result.detail = "expected 49 rows, got " + std::to_string(rows);
        return result;
    }
    result.detail = "49 rows, exact column matches big-integer sums, spot values brute-checked";
    return result;
}

// -----------------------------------------------------------------
// extra invariant checks used by the suites

CheckResult check_det_identities() {
    CheckResult result{"determinant identities (h <= 32)", true, ""};
    for (unsigned h = 0; h <= 32; ++h)
        for (auto domain : {WalkDomain::ReflectiveN0, WalkDomain::FreeZ})
            if (!cheb::det_identity_check(h, domain)) {
                result.pass = false;
                result.detail = "failure at h = " + std::to_string(h);
                return result;
            }
    result.detail = "band determinants match the scaled polynomials exactly";
    return result;
}

CheckResult check_cosine_identity() {
    CheckResult result{"chebyshev cosine identity (h <= 30)", true, ""};
    Real worst = 0;
    const Real pi = hp::pi<Real>();
    for (unsigned h = 0; h <= 30; ++h) {
        auto poly = cheb::cheb_poly(cheb::Kind::T, h);
        for (int i = 0; i < 100; ++i) {
            Real theta = pi * i / 99;
            worst = std::max(worst, abs(poly.eval(cos(theta)) - cos(h * theta)));
        }
    }
    result.pass = worst < Real("1e-10");
    result.detail = "worst deviation " + num(worst);
    return result;
}

CheckResult check_parity_domination() {
    CheckResult result{"parity, domination and integrality", true, ""};
    for (unsigned n = 1; n <= 16; ++n) {
        auto p = walks::height_spectrum_dp(n, WalkDomain::ReflectiveN0);
        auto q = walks::height_spectrum_dp(n, WalkDomain::FreeZ);
        for (const auto& [h, prob] : p.entries)
            if (h % 2 != n % 2 || prob <= 0 || prob > 1) result.pass = false;
        for (unsigned h = 0; h <= n; ++h)
            if (p.at(h) < q.at(h)) result.pass = false;
    }
    for (unsigned n = 1; n <= 64 && result.pass; ++n) {
        if (denominator(pow2(n) * closed_form::p_total(n)) != 1) result.pass = false;
        if (denominator(pow2(n) * closed_form::q_total(n)) != 1) result.pass = false;
    }
    result.detail = result.pass ? "spectra parity-clean, dominated, and 2^n-integral (n <= 64)"
                                : "invariant violated";
    return result;
}

CheckResult check_binom_order() {
    CheckResult result{"central binomial truncation order", true, ""};
    std::ostringstream detail;
    for (unsigned L = 1; L <= 3; ++L) {
        auto rel_at = [&](unsigned n) {
            unsigned alpha = static_cast<unsigned>(std::sqrt(double(n)));
            Real approx = asym::central_binom_approx(HalfInt::of(int(n)), HalfInt::of(int(alpha)), L);
            Real exact = hp::to_real<Real>(Rational(binomial(2 * n, n - alpha)));
            return abs(approx - exact) / exact;
        };
        Real shrink = rel_at(400) / rel_at(1600);
        if (shrink < 2) result.pass = false;
        detail << (L > 1 ? ", " : "") << "L=" << L << ": x" << num(shrink, 4);
    }
    result.detail = detail.str();
    return result;
}

CheckResult check_normalization() {
    CheckResult result{"density normalization at n = 4096", true, ""};
    const unsigned n = 4096;
    Real root_n = sqrt(Real(n));
    std::ostringstream detail;
    for (auto domain : {WalkDomain::ReflectiveN0, WalkDomain::FreeZ}) {
        Real acc = 0;
        unsigned h_max = static_cast<unsigned>(4 * std::sqrt(n * std::log(double(n))));
        for (unsigned h = 2; h <= h_max; h += 2)
            acc += 2 * asym::density(domain, Real(h) / root_n, ThetaForm::GaussianSide) / root_n;
        if (abs(acc - 1) >= Real("0.02")) result.pass = false;
        detail << (domain == WalkDomain::FreeZ ? ", Z: " : "N0: ") << num(acc, 8);
    }
    result.detail = detail.str();
    return result;
}

CheckResult check_moment_consistency() {
    CheckResult result{"leading-moment consistency at n = 1024", true, ""};
    Real n0_ratio = hp::to_real(walks::exact_shifted_moment(1024, WalkDomain::ReflectiveN0, 1, 0)) / 32;
    Real n0_dev = abs(n0_ratio - asym::moment_leading(WalkDomain::ReflectiveN0, 1)) /
                  asym::moment_leading(WalkDomain::ReflectiveN0, 1);
    Real z_ratio = hp::to_real(walks::exact_shifted_moment(1024, WalkDomain::FreeZ, 1, 0)) / 32;
    Real z_dev = abs(z_ratio - asym::moment_leading(WalkDomain::FreeZ, 1)) /
                 asym::moment_leading(WalkDomain::FreeZ, 1);
    result.pass = n0_dev < Real("0.05") && z_dev < Real("0.05");
    result.detail = "N0 dev " + num(n0_dev) + ", Z dev " + num(z_dev);
    return result;
}

CheckResult check_mellin_decay() {
    CheckResult result{"harmonic-sum remainder decay (large m)", true, ""};
    auto worst_at = [](int twice) {
        HalfInt m = HalfInt::from_twice(twice);
        Real worst = 0;
        for (unsigned j = 0; j <= 2; ++j)
            for (unsigned r = 0; r <= 2; ++r)
                worst = std::max(worst, asym::mellin_T(j, r, m).rel_gap());
        worst = std::max(worst, asym::mellin_U(UCase::Zero, 0, 0, m).rel_gap());
        for (unsigned j = 1; j <= 2; ++j)
            worst = std::max(worst, asym::mellin_U(UCase::LogCase, j, 0, m).rel_gap());
        for (unsigned j = 0; j <= 2; ++j)
            for (unsigned r = 1; r <= 2; ++r)
                worst = std::max(worst, asym::mellin_U(UCase::PowerCase, j, r, m).rel_gap());
        return worst;
    };
    Real small = worst_at(50), large = worst_at(900);
    result.pass = large < Real("1e-6") && large < small / 1000;
    result.detail = "worst gap " + num(small) + " at 2m=50 falls to " + num(large) + " at 2m=900";
    return result;
}

CheckResult stirling_structure() {
    CheckResult result{"stirling table structure", true, ""};
    if (asym::stirling_d(0) != 1 || asym::binom_c(0, 0) != 1) result.pass = false;
    for (unsigned l = 0; l <= 8 && result.pass; ++l)
        for (unsigned j = 0; j <= 6; ++j)
            if (3 * j > 2 * l && asym::binom_c(l, j) != 0) result.pass = false;
    result.detail = result.pass ? "d_0 = 1, c_00 = 1, c_lj = 0 beyond j = 2l/3" : "violated";
    return result;
}

}  // namespace

CheckResult criterion(int k) {
    switch (k) {
        case 1: return check_four_way();
        case 2: return check_ballot_bijection();
        case 3: return check_ballot_scaling();
        case 4: return check_expansion_scaling();
        case 5: return check_mellin();
        case 6: return check_theta_duality();
        case 7: return check_local_limit();
        case 8: return check_moments();
        case 9: return check_figure();
        default: throw std::domain_error("criterion: k must be in 1..9");
    }
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    std::vector<CheckResult> results;
    auto add_criteria = [&](std::initializer_list<int> ks) {
        for (int k : ks) results.push_back(criterion(k));
    };
    if (suite == "oracle") {
        add_criteria({1, 2});
        results.push_back(check_det_identities());
        results.push_back(check_cosine_identity());
        results.push_back(check_parity_domination());
    } else if (suite == "mellin") {
        add_criteria({5});
        results.push_back(check_mellin_decay());
    } else if (suite == "theta") {
        add_criteria({6});
        results.push_back(check_normalization());
    } else if (suite == "scaling") {
        add_criteria({3, 4});
        results.push_back(check_binom_order());
        results.push_back(stirling_structure());
    } else if (suite == "all") {
        add_criteria({1, 2, 3, 4, 5, 6, 7, 8, 9});
        results.push_back(check_det_identities());
        results.push_back(check_cosine_identity());
        results.push_back(check_parity_domination());
        results.push_back(check_mellin_decay());
        results.push_back(check_normalization());
        results.push_back(check_binom_order());
        results.push_back(stirling_structure());
        results.push_back(check_moment_consistency());
    } else {
        throw std::domain_error("run_suite: unknown suite '" + suite + "'");
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace maxwalk::verify
