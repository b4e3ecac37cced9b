#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hpdcover {

/// A location family: a density g symmetric and unimodal about 0, together
/// with its cdf G, survival function 1 - G, quantile function and log-scale
/// variants. Values are immutable after construction and safe to evaluate
/// concurrently; every member is a pure function of its argument.
struct LocationFamily {
    std::string name;

    std::function<double(double)> pdf;       // g(z)
    std::function<double(double)> cdf;       // G(z)
    std::function<double(double)> survival;  // 1 - G(z), cancellation-free
    std::function<double(double)> inv_cdf;   // G^{-1}(p), p in (0,1)
    std::function<double(double)> log_pdf;   // log g(z), -inf off support
    std::function<double(double)> log_cdf;   // log G(z), valid deep in the lower tail

    // log G(x+w) - log G(x), optionally provided in a form that stays exact
    // when |x| is huge and the two log-cdf values would cancel. Falls back
    // to the plain difference when unset.
    std::function<double(double, double)> log_cdf_diff;

    bool is_logconcave = false;

    // Analytic limit of the credible interval's upper endpoint as the
    // observation goes to -infinity, as a rule alpha -> a. Empty when no
    // closed form is known (the limit is then probed numerically).
    std::function<double(double)> tail_limit_rule;
};

/// One diagnostic check: name, worst violation seen on the probe grid
/// (0 when the property holds everywhere), and whether it passed.
struct DiagnosticCheck {
    std::string name;
    double worst_violation = 0.0;
    bool pass = false;
};

struct DiagnosticReport {
    std::vector<DiagnosticCheck> checks;
    std::string grid;  // human-readable probe grid description

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Smallest z with survival(z) < 1e-9, capped at 40. Probe grids and root
/// brackets live inside [-tail_cutoff, tail_cutoff].
double tail_cutoff(const LocationFamily& family);

/// Generic quantile by exponential bracket expansion from [-1, 1] followed
/// by bisection. Kept independent of any closed-form inv_cdf a family may
/// carry so the two can be checked against each other.
///
/// Throws InvalidProbability for p outside (0,1), BracketFailure if no sign
/// change is found within |z| <= 745.
double inv_cdf_numeric(const LocationFamily& family, double p);

/// Hazard rate g(z) / (1 - G(z)). Throws DegenerateTail when the survival
/// function underflows to zero.
double hazard(const LocationFamily& family, double z);

/// Runs the runtime diagnostics: symmetry, monotone cdf, inverse
/// consistency, unimodality, normalization; plus, for families declared
/// logconcave, concavity of log g, a nondecreasing hazard rate, and
/// concavity of log G and log(1-G) on [0, tail_cutoff]. Failures are
/// reported, never thrown.
DiagnosticReport diagnose_family(const LocationFamily& family, int n_grid);

namespace detail {

// Bisection for a continuous f with f(lo) and f(hi) of opposite sign
// (zeros count as either sign). Converges on bracket width; the residual
// alone is not a usable stop criterion deep in the tails.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol = 1e-14);

// log Phi(z) for the standard normal, valid for all z (asymptotic expansion
// below z = -37 where erfc underflows).
double normal_log_cdf(double z);

// log Phi(x+w) - log Phi(x) without cancellation, usable for x arbitrarily
// far in the lower tail.
double normal_log_cdf_diff(double x, double w);

// Standard normal quantile (Wichura's rational approximations), accurate to
// roughly double precision over the full open unit interval.
double normal_quantile(double p);

// Solves log Phi(z) = log_p for z; accepts log_p < -745 where the plain
// quantile has no representable argument.
double normal_quantile_from_log(double log_p);

}  // namespace detail

}  // namespace hpdcover
