#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "hpdcover/bounds.hpp"
#include "hpdcover/coverage.hpp"
#include "hpdcover/curve_io.hpp"
#include "hpdcover/errors.hpp"
#include "hpdcover/families.hpp"
#include "hpdcover/laplace_closed_form.hpp"

namespace hpdcover::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAuditFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Options {
    std::string family = "normal";
    double alpha = 0.1;
    double x = 0.0;
    double theta = 0.0;
    double theta_max = 0.0;  // 0: derive 4 * max(d1, 2 d0)
    int points = 400;
    std::uint64_t n = 1000000;
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "csv";
    bool allow_nonlogconcave = false;
};

double effective_theta_max(const Options& opt, const FamilyConstants& c) {
    if (opt.theta_max > 0.0) return opt.theta_max;
    return 4.0 * std::max(c.d1, c.two_d0);
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    if (path.empty() || path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw InvalidRequest("cannot open output file '" + path + "'");
    emit(os);
}

int cmd_interval(const Options& opt) {
    const LocationFamily family = make_family(parse_family_spec(opt.family));
    const Alpha alpha(opt.alpha);
    const auto policy = opt.allow_nonlogconcave ? NonLogconcavePolicy::Allow
                                                : NonLogconcavePolicy::Refuse;
    const CredibleInterval iv = credible_interval(family, alpha, opt.x, policy);
    std::cout << "l = " << format_double(iv.lower) << '\n'
              << "u = " << format_double(iv.upper) << '\n'
              << "posterior_mass = " << format_double(posterior_mass(family, alpha, opt.x))
              << '\n';
    return kExitOk;
}

int cmd_constants(const Options& opt) {
    const LocationFamily family = make_family(parse_family_spec(opt.family));
    const FamilyConstants c = family_constants(family, Alpha(opt.alpha));
    std::cout << "d0 = " << format_double(c.d0) << '\n'
              << "d1 = " << format_double(c.d1) << '\n'
              << "d2 = " << format_double(c.d2) << '\n'
              << "2d0 = " << format_double(c.two_d0) << '\n'
              << "a = " << format_double(c.tail_limit) << '\n';
    return kExitOk;
}

int cmd_curve(const Options& opt) {
    const LocationFamily family = make_family(parse_family_spec(opt.family));
    const Alpha alpha(opt.alpha);
    const FamilyConstants c = family_constants(family, alpha);
    const CoverageCurve curve =
        coverage_curve(family, alpha, effective_theta_max(opt, c), opt.points);
    write_to(opt.out, [&](std::ostream& os) {
        if (opt.format == "json")
            write_curve_json(os, curve);
        else
            write_curve_csv(os, curve);
    });
    return kExitOk;
}

int cmd_mc(const Options& opt) {
    const LocationFamily family = make_family(parse_family_spec(opt.family));
    const Alpha alpha(opt.alpha);
    const McEstimate est = coverage_mc(family, alpha, opt.theta, opt.n, opt.seed);
    const double exact = coverage_exact(family, alpha, opt.theta).coverage;
    const double sigmas =
        est.std_error > 0.0 ? (est.mean - exact) / est.std_error : 0.0;
    std::cout << "theta = " << format_double(est.theta) << '\n'
              << "n = " << est.n << '\n'
              << "seed = " << est.seed << '\n'
              << "mean = " << format_double(est.mean) << '\n'
              << "std_error = " << format_double(est.std_error) << '\n'
              << "exact = " << format_double(exact) << '\n'
              << "deviation_sigmas = " << format_double(sigmas) << '\n';
    return kExitOk;
}

int cmd_audit(const Options& opt) {
    const LocationFamily family = make_family(parse_family_spec(opt.family));
    const Alpha alpha(opt.alpha);

    const DiagnosticReport diag = diagnose_family(family, 256);
    for (const auto& check : diag.checks) {
        std::cout << "diagnostic " << check.name << " = " << (check.pass ? "pass" : "FAIL")
                  << " worst " << format_double(check.worst_violation) << '\n';
    }

    const TailRatioAudit tail_ratios = check_tail_ratios(family, 8.0, 512);
    std::cout << "tail_ratio_pdf_min_slack = "
              << format_double(tail_ratios.min_slack_pdf_ratio) << '\n'
              << "tail_ratio_survival_min_slack = "
              << format_double(tail_ratios.min_slack_survival_ratio) << '\n'
              << "tail_ratio = " << (tail_ratios.pass ? "pass" : "FAIL") << '\n';

    const FamilyConstants c = family_constants(family, alpha);
    const CoverageCurve curve =
        coverage_curve(family, alpha, effective_theta_max(opt, c), opt.points);
    const BoundsReport report = bound_report(family, alpha, curve);
    write_report_text(std::cout, report);

    if (!opt.out.empty()) {
        write_to(opt.out, [&](std::ostream& os) { write_report_json(os, report); });
    }

    const bool ok = diag.all_pass() && tail_ratios.pass && report.all_pass();
    std::cout << "audit_overall = " << (ok ? "pass" : "FAIL") << '\n';
    return ok ? kExitOk : kExitAuditFailed;
}

int cmd_bracket(const Options& opt) {
    const Alpha alpha(opt.alpha);
    const auto [lo, hi] = min_coverage_bracket(alpha);
    const double legacy = (1.0 - opt.alpha) / (1.0 + opt.alpha);
    char line[128];
    std::snprintf(line, sizeof(line), "%.6f <= inf C <= %.6f; legacy %.6f", lo, hi, legacy);
    std::cout << line << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"HPD credible intervals for a lower-bounded location parameter,"
                 " exact frequentist coverage, and analytic bound audits"};
    app.require_subcommand(1);

    Options opt;
    const auto add_family_alpha = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family,
                        "normal | laplace | polyexp | student:<dof>");
        sub->add_option("--alpha", opt.alpha, "miscoverage level in (0,1)");
    };

    auto* interval = app.add_subcommand("interval", "credible interval for one observation");
    add_family_alpha(interval);
    interval->add_option("--x", opt.x, "observation")->required();
    interval->add_flag("--allow-nonlogconcave", opt.allow_nonlogconcave,
                       "permit non-logconcave families (counterexample mode)");

    auto* constants = app.add_subcommand("constants", "quantile constants d0, d1, d2, 2d0, a");
    add_family_alpha(constants);

    auto* curve = app.add_subcommand("curve", "coverage curve over a theta grid");
    add_family_alpha(curve);
    curve->add_option("--theta-max", opt.theta_max, "grid end (default 4*max(d1, 2d0))");
    curve->add_option("--points", opt.points, "grid size (default 400)");
    curve->add_option("--out", opt.out, "output path (default stdout)");
    curve->add_option("--format", opt.format, "csv | json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* mc = app.add_subcommand("mc", "Monte Carlo coverage check at one theta");
    add_family_alpha(mc);
    mc->add_option("--theta", opt.theta, "true parameter value")->required();
    mc->add_option("--n", opt.n, "sample count (default 1e6)");
    mc->add_option("--seed", opt.seed, "stream seed (default 42)");

    auto* audit = app.add_subcommand("audit", "diagnostics, tail-ratio checks, bound audits");
    add_family_alpha(audit);
    audit->add_option("--theta-max", opt.theta_max, "grid end (default 4*max(d1, 2d0))");
    audit->add_option("--points", opt.points, "grid size (default 400)");
    audit->add_option("--out", opt.out, "also write the report as JSON to this path");

    auto* bracket = app.add_subcommand("bracket", "minimum-coverage bracket for alpha");
    bracket->add_option("--alpha", opt.alpha, "miscoverage level in (0,1)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hpdcover");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (interval->parsed()) return cmd_interval(opt);
        if (constants->parsed()) return cmd_constants(opt);
        if (curve->parsed()) return cmd_curve(opt);
        if (mc->parsed()) return cmd_mc(opt);
        if (audit->parsed()) return cmd_audit(opt);
        if (bracket->parsed()) return cmd_bracket(opt);
    } catch (const InvalidRequest& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericFailure& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}

}  // namespace hpdcover::cli
