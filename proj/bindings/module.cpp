#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "maxwalk/asymptotics.hpp"
#include "maxwalk/chebyshev.hpp"
#include "maxwalk/closed_form.hpp"
#include "maxwalk/figure.hpp"
#include "maxwalk/format.hpp"
#include "maxwalk/special.hpp"
#include "maxwalk/verify.hpp"
#include "maxwalk/walks.hpp"

namespace py = pybind11;

namespace {

using namespace maxwalk;
using hp::Real;
using walks::WalkDomain;

WalkDomain parse_domain(const std::string& name) {
    if (name == "n0") return WalkDomain::ReflectiveN0;
    if (name == "z") return WalkDomain::FreeZ;
    throw std::domain_error("domain must be 'n0' or 'z'");
}

py::object big_to_py(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object rational_to_fraction(const Rational& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(big_to_py(numerator(value)), big_to_py(denominator(value)));
}

py::dict spectrum_to_dict(const walks::HeightSpectrum& spectrum) {
    py::dict out;
    for (const auto& [h, prob] : spectrum.entries) out[py::int_(h)] = rational_to_fraction(prob);
    return out;
}

asym::Quantity parse_quantity(const std::string& name) {
    if (name == "p") return asym::Quantity::PTotal;
    if (name == "q") return asym::Quantity::QTotal;
    if (name == "eh-n0") return asym::Quantity::HeightMeanN0;
    if (name == "vh-n0") return asym::Quantity::HeightVarN0;
    if (name == "eh-z") return asym::Quantity::HeightMeanZ;
    if (name == "vh-z") return asym::Quantity::HeightVarZ;
    if (name == "bn") return asym::Quantity::BallotRatio;
    throw std::domain_error("unknown quantity '" + name + "'");
}

asym::ThetaForm parse_form(const std::string& name) {
    if (name == "gauss") return asym::ThetaForm::GaussianSide;
    if (name == "dual") return asym::ThetaForm::DualSide;
    throw std::domain_error("representation must be 'gauss' or 'dual'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and asymptotic analysis of non-negative walks ending at their maximum";

    // exact engines
    m.def(
        "exact_total",
        [](unsigned n, const std::string& domain) {
            return rational_to_fraction(closed_form::total(n, parse_domain(domain)));
        },
        py::arg("n"), py::arg("domain"),
        "Probability that a length-n walk is admissible, as a Fraction.");
    m.def(
        "prob_height",
        [](unsigned n, unsigned h, const std::string& domain) {
            return rational_to_fraction(parse_domain(domain) == WalkDomain::ReflectiveN0
                                            ? closed_form::p_height(n, h)
                                            : closed_form::q_height(n, h));
        },
        py::arg("n"), py::arg("h"), py::arg("domain"));
    m.def(
        "height_spectrum",
        [](unsigned n, const std::string& domain, const std::string& engine) {
            WalkDomain d = parse_domain(domain);
            if (engine == "closed") return spectrum_to_dict(closed_form::spectrum(n, d));
            if (engine == "dp") return spectrum_to_dict(walks::height_spectrum_dp(n, d));
            if (engine == "series") return spectrum_to_dict(cheb::height_spectrum_series(n, d));
            if (engine == "enum")
                return spectrum_to_dict(
                    walks::spectrum_from_paths(n, d, walks::enumerate_admissible(n, d)));
            throw std::domain_error("engine must be closed, dp, series or enum");
        },
        py::arg("n"), py::arg("domain"), py::arg("engine") = "closed");
    m.def(
        "enumerate_admissible",
        [](unsigned n, const std::string& domain) {
            py::list out;
            for (const auto& wp : walks::enumerate_admissible(n, parse_domain(domain))) {
                std::string steps;
                for (auto s : wp.path.steps) steps += s > 0 ? '+' : '-';
                out.append(py::make_tuple(steps, wp.height, rational_to_fraction(wp.probability)));
            }
            return out;
        },
        py::arg("n"), py::arg("domain"));
    m.def("ballot_count", [](unsigned n) { return big_to_py(walks::ballot_count(n)); }, py::arg("n"));
    m.def("ballot_count_bruteforce",
          [](unsigned n) { return py::int_(walks::ballot_count_bruteforce(n)); }, py::arg("n"));
    m.def("extremal_count", [](unsigned n) { return big_to_py(walks::extremal_count(n)); },
          py::arg("n"));
    m.def(
        "exact_shifted_moment",
        [](unsigned n, const std::string& domain, unsigned r, unsigned shift) {
            return rational_to_fraction(
                walks::exact_shifted_moment(n, parse_domain(domain), r, shift));
        },
        py::arg("n"), py::arg("domain"), py::arg("r"), py::arg("shift") = 0);

    // chebyshev layer
    m.def(
        "cheb_poly",
        [](const std::string& kind, unsigned h) {
            auto poly = cheb::cheb_poly(kind == "T" ? cheb::Kind::T : cheb::Kind::U, h);
            py::list out;
            for (const auto& c : poly.coeff) out.append(big_to_py(c));
            return out;
        },
        py::arg("kind"), py::arg("h"), "Coefficients by increasing degree.");
    m.def(
        "gf_coefficient",
        [](const std::string& kind, unsigned h, unsigned n) {
            return rational_to_fraction(
                cheb::gf_coefficient(kind == "T" ? cheb::Kind::T : cheb::Kind::U, h, n));
        },
        py::arg("kind"), py::arg("h"), py::arg("n"));
    m.def(
        "det_identity_check",
        [](unsigned h, const std::string& domain) {
            return cheb::det_identity_check(h, parse_domain(domain));
        },
        py::arg("h"), py::arg("domain"));

    // asymptotic layer (floats; digit strings where precision matters)
    m.def(
        "expansion",
        [](const std::string& quantity) {
            auto e = asym::expansion(parse_quantity(quantity));
            py::list out;
            for (const auto& entry : e.entries)
                out.append(py::make_tuple(entry.exponent2 / 2.0,
                                          entry.coefficient.value().convert_to<double>()));
            return out;
        },
        py::arg("quantity"), "List of (exponent, coefficient) pairs.");
    m.def(
        "expansion_eval",
        [](const std::string& quantity, double n, int terms) {
            return asym::expansion(parse_quantity(quantity))
                .evaluate(Real(n), terms)
                .convert_to<double>();
        },
        py::arg("quantity"), py::arg("n"), py::arg("terms") = -1);
    m.def(
        "moment_leading",
        [](const std::string& domain, unsigned r) {
            return asym::moment_leading(parse_domain(domain), r).convert_to<double>();
        },
        py::arg("domain"), py::arg("r"));
    m.def(
        "density",
        [](const std::string& domain, double eta, const std::string& rep) {
            return asym::density(parse_domain(domain), Real(eta), parse_form(rep))
                .convert_to<double>();
        },
        py::arg("domain"), py::arg("eta"), py::arg("rep") = "gauss");
    m.def(
        "local_limit",
        [](const std::string& domain, unsigned n, unsigned h) {
            auto out = asym::local_limit_approx(parse_domain(domain), n, h);
            return py::make_tuple(out.value.convert_to<double>(), out.in_window, out.possible);
        },
        py::arg("domain"), py::arg("n"), py::arg("h"),
        "(approximation, in_window, possible) for P(height = h).");
    m.def(
        "stirling_d",
        [](unsigned r) { return rational_to_fraction(asym::stirling_d(r)); }, py::arg("r"));
    m.def(
        "binom_c",
        [](unsigned l, unsigned j) { return rational_to_fraction(asym::binom_c(l, j)); },
        py::arg("l"), py::arg("j"));
    m.def(
        "central_binom_approx",
        [](int twice_n, int twice_alpha, unsigned order) {
            return asym::central_binom_approx(asym::HalfInt::from_twice(twice_n),
                                              asym::HalfInt::from_twice(twice_alpha), order)
                .convert_to<double>();
        },
        py::arg("twice_n"), py::arg("twice_alpha"), py::arg("order"));
    m.def(
        "mellin_T",
        [](unsigned j, unsigned r, int twice_m) {
            auto c = asym::mellin_T(j, r, asym::HalfInt::from_twice(twice_m));
            return py::make_tuple(c.lhs.convert_to<double>(), c.rhs.convert_to<double>(),
                                  c.rel_gap().convert_to<double>());
        },
        py::arg("j"), py::arg("r"), py::arg("twice_m"), "(lhs, rhs, relative gap).");
    m.def(
        "mellin_U",
        [](const std::string& c, unsigned j, unsigned r, int twice_m) {
            asym::UCase u = c == "zero"  ? asym::UCase::Zero
                            : c == "log" ? asym::UCase::LogCase
                                         : asym::UCase::PowerCase;
            auto check = asym::mellin_U(u, j, r, asym::HalfInt::from_twice(twice_m));
            return py::make_tuple(check.lhs.convert_to<double>(), check.rhs.convert_to<double>(),
                                  check.rel_gap().convert_to<double>());
        },
        py::arg("ucase"), py::arg("j"), py::arg("r"), py::arg("twice_m"));

    // special values as digit strings
    m.def(
        "beta_digits",
        [](int s, int sig) { return real_str(special::dirichlet_beta<Real>(s), sig); },
        py::arg("s"), py::arg("sig") = 30);
    m.def(
        "zeta_digits", [](int s, int sig) { return real_str(special::zeta<Real>(s), sig); },
        py::arg("s"), py::arg("sig") = 30);

    // figure data and verification
    m.def("ballot_cmp_csv", &figure::ballot_cmp_csv, py::arg("max_n"));
    m.def(
        "run_suite",
        [](const std::string& suite) {
            py::list out;
            for (const auto& r : verify::run_suite(suite))
                out.append(py::make_tuple(r.name, r.pass, r.detail));
            return out;
        },
        py::arg("suite"), "Run a verification suite; list of (name, pass, detail).");
}
