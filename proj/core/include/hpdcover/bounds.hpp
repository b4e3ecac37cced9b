#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hpdcover/coverage.hpp"

namespace hpdcover {

struct AuditResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // worst slack observed; negative means violated
};

/// Every analytic bound for one (family, alpha) pair plus the audit of a
/// computed coverage curve against them.
struct BoundsReport {
    double alpha = 0.0;
    double new_lower_bound = 0.0;     // 1 - 3 alpha / 2
    double bracket_upper = 0.0;       // 1 - 3 alpha / 2 + alpha^2/(1+alpha)
    double legacy_lower_bound = 0.0;  // (1 - alpha) / (1 + alpha)
    double sup_upper = 0.0;           // 1 - alpha / 2
    double sup_lower = 0.0;           // G(x1(d2)) - alpha^2/(1+alpha)
    double min_location = 0.0;        // 2 d0
    double audited_min = 0.0;         // observed minimum of the curve
    double audited_argmin = 0.0;      // where the observed minimum sits
    double audited_sup = 0.0;         // observed supremum of the curve
    std::vector<AuditResult> audits;

    bool all_pass() const {
        for (const auto& a : audits)
            if (!a.pass) return false;
        return true;
    }
};

/// The bracket containing the minimum coverage:
/// [1 - 3 alpha / 2, 1 - 3 alpha / 2 + alpha^2 / (1 + alpha)].
std::pair<double, double> min_coverage_bracket(Alpha alpha);

/// Audits a computed curve against every analytic bound: the strict legacy
/// lower bound, the minimum-coverage bracket at 2 d0, both supremum bounds,
/// the nominal-coverage thresholds at d2 and d1, the monotone-shape
/// properties, the floor below d1, and the location of the minimum.
BoundsReport bound_report(const LocationFamily& family, Alpha alpha,
                          const CoverageCurve& curve);

/// Slack audit of the two tail-ratio inequalities
///   g(z)/g(2z)           >= 1/(2 (1-G(z))) - 1
///   (1-G(z))/(1-G(2z))   >= 1/(2 (1-G(z))) - 1
/// on an n_grid-point grid over [0, z_max].
struct TailRatioAudit {
    double z_max = 0.0;
    int n_grid = 0;
    double min_slack_pdf_ratio = 0.0;
    double min_slack_survival_ratio = 0.0;
    bool pass = false;
};

TailRatioAudit check_tail_ratios(const LocationFamily& family, double z_max, int n_grid);

}  // namespace hpdcover
