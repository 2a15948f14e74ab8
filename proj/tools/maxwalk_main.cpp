// Command-line front end: exact walk counts, asymptotic evaluation,
// cross-method verification and figure-data export.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "maxwalk/asymptotics.hpp"
#include "maxwalk/chebyshev.hpp"
#include "maxwalk/closed_form.hpp"
#include "maxwalk/figure.hpp"
#include "maxwalk/format.hpp"
#include "maxwalk/verify.hpp"
#include "maxwalk/walks.hpp"

namespace {

using namespace maxwalk;
using hp::Real;
using walks::WalkDomain;

WalkDomain parse_domain(const std::string& name) {
    return name == "n0" ? WalkDomain::ReflectiveN0 : WalkDomain::FreeZ;
}

std::string prob_symbol(WalkDomain domain, unsigned n) {
    std::string base = domain == WalkDomain::ReflectiveN0 ? "p_" : "q_";
    return base + std::to_string(n);
}

int run_enumerate(unsigned n, const std::string& domain_name, bool count_only) {
    WalkDomain domain = parse_domain(domain_name);
    if (count_only) {
        std::cout << walks::count_admissible(n, domain) << "\n";
        return 0;
    }
    auto paths = walks::enumerate_admissible(n, domain);
    for (const auto& wp : paths) {
        std::string steps;
        for (auto s : wp.path.steps) steps += s > 0 ? '+' : '-';
        if (steps.empty()) steps = "(empty)";
        std::cout << steps << " h=" << wp.height << " p=" << rat_str(wp.probability) << "\n";
    }
    std::cout << "total " << paths.size() << " paths\n";
    return 0;
}

int run_prob(unsigned n, const std::string& domain_name, int h, const std::string& method) {
    WalkDomain domain = parse_domain(domain_name);
    std::string symbol = prob_symbol(domain, n);
    if (h >= 0) symbol += "^(" + std::to_string(h) + ")";

    auto value_of = [&](const std::string& engine) -> Rational {
        if (engine == "enum") {
            auto spectrum = walks::spectrum_from_paths(
                n, domain, walks::enumerate_admissible(n, domain));
            return h >= 0 ? spectrum.at(h) : spectrum.total;
        }
        if (engine == "dp") {
            auto spectrum = walks::height_spectrum_dp(n, domain);
            return h >= 0 ? spectrum.at(h) : spectrum.total;
        }
        if (engine == "series") {
            auto spectrum = cheb::height_spectrum_series(n, domain);
            return h >= 0 ? spectrum.at(h) : spectrum.total;
        }
        auto spectrum = closed_form::spectrum(n, domain);
        return h >= 0 ? spectrum.at(h) : spectrum.total;
    };
    static const std::map<std::string, std::string> labels = {
        {"enum", "enumeration"},
        {"dp", "transfer-matrix"},
        {"series", "reciprocal-series"},
        {"closed", "closed-form"},
    };
    if (method != "all") {
        Rational value = value_of(method);
        std::cout << symbol << " = " << rat_str(value) << " (" << labels.at(method) << ")\n";
        return 0;
    }
    bool agree = true;
    Rational reference;
    bool first = true;
    for (const auto& [engine, label] : std::map<std::string, std::string>{
             {"1enum", "enumeration"},
             {"2dp", "transfer-matrix"},
             {"3series", "reciprocal-series"},
             {"4closed", "closed-form"}}) {
        Rational value = value_of(engine.substr(1));
        std::cout << symbol << " = " << rat_str(value) << " (" << label << ")\n";
        if (first) {
            reference = value;
            first = false;
        } else if (value != reference) {
            agree = false;
        }
    }
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : 2;
}

int run_ballot(unsigned max_n, bool check_series) {
    std::cout << "n B_n B_n/2^n";
    if (check_series) std::cout << " err*n^7";
    std::cout << "\n";
    auto series = asym::expansion(asym::Quantity::BallotRatio);
    for (unsigned n = 2; n <= max_n; ++n) {
        BigInt count = walks::ballot_count(n);
        Rational ratio(count, pow2(n));
        std::cout << n << " " << count.str() << " " << decimal_str(ratio, 12);
        if (check_series) {
            Rational err = ratio - series.evaluate_exact(n);
            BigInt n7 = 1;
            for (int i = 0; i < 7; ++i) n7 *= n;
            std::cout << " " << compact_str(hp::to_real(err * n7), 6);
        }
        std::cout << "\n";
    }
    return 0;
}

int run_asympt(const std::string& quantity_name, unsigned n, int terms) {
    static const std::map<std::string, asym::Quantity> quantities = {
        {"p", asym::Quantity::PTotal},         {"q", asym::Quantity::QTotal},
        {"eh-n0", asym::Quantity::HeightMeanN0}, {"vh-n0", asym::Quantity::HeightVarN0},
        {"eh-z", asym::Quantity::HeightMeanZ},   {"vh-z", asym::Quantity::HeightVarZ},
        {"bn", asym::Quantity::BallotRatio},
    };
    auto expansion = asym::expansion(quantities.at(quantity_name));
    size_t used = terms < 0 ? expansion.entries.size()
                            : std::min<size_t>(terms, expansion.entries.size());
    for (size_t i = 0; i < used; ++i) {
        const auto& entry = expansion.entries[i];
        std::string exponent = entry.exponent2 % 2 == 0
                                   ? std::to_string(entry.exponent2 / 2)
                                   : std::to_string(entry.exponent2) + "/2";
        std::cout << "term n^(" << exponent << ") "
                  << compact_str(entry.coefficient.value(), 12) << "\n";
    }
    std::cout << "value " << compact_str(expansion.evaluate(Real(n), static_cast<int>(used)), 12)
              << "\n";
    if (quantity_name == "bn")
        std::cout << "note: multiply by 2^n for the sequence itself\n";
    return 0;
}

int run_moments(const std::string& domain_name, unsigned r, unsigned n, bool with_exact) {
    WalkDomain domain = parse_domain(domain_name);
    Real lead = asym::moment_leading(domain, r);
    Real approx = lead * pow(Real(n), Real(r) / 2);
    std::cout << "leading-order " << compact_str(approx, 12) << " (coefficient "
              << compact_str(lead, 12) << ")\n";
    if (with_exact) {
        Rational exact = walks::exact_shifted_moment(n, domain, r, 0);
        std::cout << "exact " << rat_str(exact) << "\n";
        std::cout << "exact-decimal " << compact_str(hp::to_real(exact), 12) << "\n";
        std::cout << "ratio " << compact_str(hp::to_real(exact) / approx, 6) << "\n";
    }
    return 0;
}

int run_density(const std::string& domain_name, unsigned n, unsigned h, const std::string& rep) {
    WalkDomain domain = parse_domain(domain_name);
    Real eta = Real(h) / sqrt(Real(n));
    std::cout << "eta " << compact_str(eta, 12) << "\n";
    if (rep == "gauss" || rep == "both")
        std::cout << "density-gauss "
                  << compact_str(asym::density(domain, eta, asym::ThetaForm::GaussianSide), 12)
                  << "\n";
    if (rep == "dual" || rep == "both")
        std::cout << "density-dual "
                  << compact_str(asym::density(domain, eta, asym::ThetaForm::DualSide), 12)
                  << "\n";
    auto local = asym::local_limit_approx(domain, n, h);
    std::cout << "local-limit " << compact_str(local.value, 12) << (local.possible ? "" : " (height impossible)")
              << (local.possible && !local.in_window ? " (outside validity window)" : "") << "\n";
    return 0;
}

int run_verify(const std::string& suite) {
    auto results = maxwalk::verify::run_suite(suite);
    for (const auto& r : results)
        std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << "\n       "
                  << r.detail << "\n";
    bool ok = maxwalk::verify::all_passed(results);
    std::cout << (ok ? "suite passed" : "suite FAILED") << "\n";
    return ok ? 0 : 2;
}

int run_figure(unsigned max_n, const std::string& out_path) {
    std::string csv = figure::ballot_cmp_csv(max_n);
    if (out_path.empty()) {
        std::cout << csv;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 1;
    }
    out << csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and asymptotic analysis of non-negative walks ending at their maximum"};
    app.require_subcommand(1);

    auto domain_check = CLI::IsMember({"n0", "z"});

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List admissible paths of one length");
    unsigned enum_n = 0;
    std::string enum_domain = "n0";
    bool count_only = false;
    enumerate->add_option("--n", enum_n, "walk length")->required();
    enumerate->add_option("--domain", enum_domain)->check(domain_check)->required();
    enumerate->add_flag("--count-only", count_only, "print only the path count");

    // prob ("--h" needs the single-letter name, so help moves to --help)
    auto* prob = app.add_subcommand("prob", "Admissibility probability by one or all engines");
    prob->set_help_flag("--help", "print help");
    unsigned prob_n = 0;
    std::string prob_domain = "n0", prob_method = "all";
    int prob_h = -1;
    prob->add_option("--n", prob_n)->required();
    prob->add_option("--domain", prob_domain)->check(domain_check)->required();
    prob->add_option("--h", prob_h, "fixed height (omit for the total)");
    prob->add_option("--method", prob_method)
        ->check(CLI::IsMember({"enum", "dp", "series", "closed", "all"}));

    // ballot
    auto* ballot = app.add_subcommand("ballot", "Bidirectional ballot sequence counts");
    unsigned ballot_max = 0;
    bool zhao_column = false;
    ballot->add_option("--max-n", ballot_max)->required()->check(CLI::Range(2u, 4096u));
    ballot->add_flag("--check-zhao", zhao_column, "append the n^7-scaled series residual");

    // asympt
    auto* asympt = app.add_subcommand("asympt", "Evaluate a printed asymptotic series");
    std::string quantity;
    unsigned asympt_n = 0;
    int asympt_terms = -1;
    asympt->add_option("--quantity", quantity)
        ->check(CLI::IsMember({"p", "q", "eh-n0", "vh-n0", "eh-z", "vh-z", "bn"}))
        ->required();
    asympt->add_option("--n", asympt_n)->required()->check(CLI::PositiveNumber);
    asympt->add_option("--terms", asympt_terms, "number of leading terms (default all)");

    // moments
    auto* moments = app.add_subcommand("moments", "Height moments, leading order and exact");
    std::string moments_domain = "n0";
    unsigned moments_r = 1, moments_n = 0;
    bool moments_exact = false;
    moments->add_option("--domain", moments_domain)->check(domain_check)->required();
    moments->add_option("--r", moments_r)->required()->check(CLI::PositiveNumber);
    moments->add_option("--n", moments_n)->required()->check(CLI::PositiveNumber);
    moments->add_flag("--exact", moments_exact, "also compute the exact moment");

    // density
    auto* density = app.add_subcommand("density", "Limiting height density and local limit");
    density->set_help_flag("--help", "print help");
    std::string density_domain = "n0", density_rep = "both";
    unsigned density_n = 0, density_h = 0;
    density->add_option("--domain", density_domain)->check(domain_check)->required();
    density->add_option("--n", density_n)->required()->check(CLI::PositiveNumber);
    density->add_option("--h", density_h)->required()->check(CLI::PositiveNumber);
    density->add_option("--rep", density_rep)->check(CLI::IsMember({"gauss", "dual", "both"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"oracle", "mellin", "theta", "scaling", "all"}));

    // figure, with one named data set
    auto* figure_cmd = app.add_subcommand("figure", "Export figure data as CSV");
    auto* ballot_cmp = figure_cmd->add_subcommand("ballot-cmp", "exact vs series ballot ratios");
    unsigned figure_max = 50;
    std::string figure_out;
    ballot_cmp->add_option("--max-n", figure_max)->required()->check(CLI::Range(2u, 4096u));
    ballot_cmp->add_option("--out", figure_out, "output path (default stdout)");
    figure_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message or help text
        return e.get_name() == "CallForHelp" ? 0 : 1;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(enum_n, enum_domain, count_only);
        if (prob->parsed()) return run_prob(prob_n, prob_domain, prob_h, prob_method);
        if (ballot->parsed()) return run_ballot(ballot_max, zhao_column);
        if (asympt->parsed()) return run_asympt(quantity, asympt_n, asympt_terms);
        if (moments->parsed()) return run_moments(moments_domain, moments_r, moments_n, moments_exact);
        if (density->parsed()) return run_density(density_domain, density_n, density_h, density_rep);
        if (verify_cmd->parsed()) return run_verify(suite);
        if (figure_cmd->parsed()) return run_figure(figure_max, figure_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
