#include "hpdcover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hpdcover/errors.hpp"

namespace hpdcover {

namespace {

constexpr double kIneqTol = 1e-9;   // analytic inequalities
constexpr double kMonoTol = 1e-10;  // adjacent-pair monotonicity slack

bool near(double x, double landmark) {
    return std::abs(x - landmark) <= 1e-9 * (1.0 + std::abs(landmark));
}

// Smallest margin of "coverage >= floor" over a filtered set of points.
template <typename Filter>
AuditResult floor_audit(const std::string& name, const CoverageCurve& curve, double floor,
                        Filter&& include) {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& p : curve.points)
        if (include(p)) margin = std::min(margin, p.coverage - floor);
    return {name, margin >= -kIneqTol, margin};
}

template <typename Filter>
AuditResult ceiling_audit(const std::string& name, const CoverageCurve& curve, double ceiling,
                          Filter&& include) {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& p : curve.points)
        if (include(p)) margin = std::min(margin, ceiling - p.coverage);
    return {name, margin >= -kIneqTol, margin};
}

// Monotonicity over consecutive points whose thetas both satisfy include.
AuditResult monotone_audit(const std::string& name, const CoverageCurve& curve,
                           bool nonincreasing, double lo, double hi) {
    double margin = std::numeric_limits<double>::infinity();
    const auto& pts = curve.points;
    for (size_t i = 1; i < pts.size(); ++i) {
        const double t0 = pts[i - 1].theta, t1 = pts[i].theta;
        if (t0 < lo - 1e-12 || t1 > hi + 1e-12) continue;
        const double step = nonincreasing ? pts[i - 1].coverage - pts[i].coverage
                                          : pts[i].coverage - pts[i - 1].coverage;
        margin = std::min(margin, step);
    }
    return {name, margin >= -kMonoTol, margin};
}

}  // namespace

std::pair<double, double> min_coverage_bracket(Alpha alpha) {
    const double a = alpha.value();
    const double lower = 1.0 - 1.5 * a;
    return {lower, lower + a * a / (1.0 + a)};
}

BoundsReport bound_report(const LocationFamily& family, Alpha alpha,
                          const CoverageCurve& curve) {
    if (!family.is_logconcave)
        throw NonLogconcaveFamily("bound_report requires a logconcave family");
    if (curve.points.empty()) throw InvalidRequest("bound_report: empty curve");

    const double a = alpha.value();
    const FamilyConstants& c = curve.constants;

    BoundsReport r;
    r.alpha = a;
    std::tie(r.new_lower_bound, r.bracket_upper) = min_coverage_bracket(alpha);
    r.legacy_lower_bound = (1.0 - a) / (1.0 + a);
    r.sup_upper = 1.0 - 0.5 * a;
    r.sup_lower =
        family.cdf(solve_boundary(family, alpha, c, Branch::X1, c.d2)) - a * a / (1.0 + a);
    r.min_location = c.two_d0;

    r.audited_min = std::numeric_limits<double>::infinity();
    r.audited_sup = -std::numeric_limits<double>::infinity();
    for (const auto& p : curve.points) {
        if (p.coverage < r.audited_min) {
            r.audited_min = p.coverage;
            r.audited_argmin = p.theta;
        }
        r.audited_sup = std::max(r.audited_sup, p.coverage);
    }

    double coverage_at_min_location = std::numeric_limits<double>::quiet_NaN();
    for (const auto& p : curve.points)
        if (p.theta == c.two_d0) coverage_at_min_location = p.coverage;
    if (std::isnan(coverage_at_min_location))
        throw InvalidRequest("bound_report: curve does not contain theta = 2 d0");

    const auto all = [](const CoveragePoint&) { return true; };
    r.audits.push_back(floor_audit("legacy_lower_strict", curve, r.legacy_lower_bound, all));
    r.audits.back().pass = r.audits.back().margin > 0.0;  // strict inequality

    r.audits.push_back({"min_bracket_lower",
                        coverage_at_min_location - r.new_lower_bound >= -kIneqTol,
                        coverage_at_min_location - r.new_lower_bound});
    r.audits.push_back({"min_bracket_upper",
                        r.bracket_upper - coverage_at_min_location >= -kIneqTol,
                        r.bracket_upper - coverage_at_min_location});

    r.audits.push_back(ceiling_audit("sup_upper", curve, r.sup_upper, all));
    r.audits.push_back({"sup_lower", r.audited_sup - r.sup_lower >= -kIneqTol,
                        r.audited_sup - r.sup_lower});

    // Thresholds at d2 and d1. At a shared landmark (the Laplace has
    // a = d1 = d2) the left value is the coverage at theta = a itself and
    // the right value is the limit from above, so each side joins only the
    // check whose region it represents.
    r.audits.push_back(floor_audit("nominal_floor_below_d2", curve, 1.0 - a,
                                   [&](const CoveragePoint& p) {
                                       if (near(p.theta, c.d2)) return p.side != Side::Right;
                                       return p.theta < c.d2;
                                   }));
    r.audits.push_back(ceiling_audit("nominal_ceiling_above_d1", curve, 1.0 - a,
                                     [&](const CoveragePoint& p) {
                                         if (near(p.theta, c.d1)) return p.side != Side::Left;
                                         return p.theta > c.d1;
                                     }));

    r.audits.push_back(floor_audit("plateau_floor", curve, 1.0 / (1.0 + a),
                                   [&](const CoveragePoint& p) {
                                       if (near(p.theta, c.tail_limit))
                                           return p.side != Side::Right;
                                       return p.theta < c.tail_limit;
                                   }));

    r.audits.push_back(
        monotone_audit("decreasing_on_d1_2d0", curve, /*nonincreasing=*/true, c.d1, c.two_d0));
    r.audits.push_back(monotone_audit("increasing_above_2d0", curve, /*nonincreasing=*/false,
                                      c.two_d0, std::numeric_limits<double>::infinity()));

    r.audits.push_back(floor_audit("floor_below_d1", curve, coverage_at_min_location,
                                   [&](const CoveragePoint& p) {
                                       return p.theta <= c.d1;
                                   }));

    double grid_step = 0.0;
    for (size_t i = 1; i < curve.points.size(); ++i)
        grid_step = std::max(grid_step, curve.points[i].theta - curve.points[i - 1].theta);
    const double argmin_offset = std::abs(r.audited_argmin - c.two_d0);
    r.audits.push_back(
        {"min_at_2d0", argmin_offset <= grid_step, grid_step - argmin_offset});

    return r;
}

TailRatioAudit check_tail_ratios(const LocationFamily& family, double z_max, int n_grid) {
    if (!family.is_logconcave)
        throw NonLogconcaveFamily("check_tail_ratios requires a logconcave family");
    if (!(z_max > 0.0) || n_grid < 2) throw InvalidRequest("check_tail_ratios: bad grid");

    TailRatioAudit audit;
    audit.z_max = z_max;
    audit.n_grid = n_grid;
    audit.min_slack_pdf_ratio = std::numeric_limits<double>::infinity();
    audit.min_slack_survival_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_grid; ++i) {
        const double z = z_max * static_cast<double>(i) / (n_grid - 1);
        const double rhs = 1.0 / (2.0 * family.survival(z)) - 1.0;
        audit.min_slack_pdf_ratio = std::min(
            audit.min_slack_pdf_ratio, family.pdf(z) / family.pdf(2.0 * z) - rhs);
        audit.min_slack_survival_ratio = std::min(
            audit.min_slack_survival_ratio, family.survival(z) / family.survival(2.0 * z) - rhs);
    }
    audit.pass =
        audit.min_slack_pdf_ratio >= 0.0 && audit.min_slack_survival_ratio >= 0.0;
    return audit;
}

}  // namespace hpdcover
