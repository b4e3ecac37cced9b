#include "hpdcover/coverage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "hpdcover/errors.hpp"
#include "hpdcover/parallel.hpp"
#include "hpdcover/rng.hpp"

namespace hpdcover {

namespace {

void require_logconcave(const LocationFamily& family) {
    if (!family.is_logconcave)
        throw NonLogconcaveFamily("family '" + family.name +
                                  "' is not logconcave; coverage theory does not apply");
}

double log_cdf_difference(const LocationFamily& family, double x, double w) {
    if (family.log_cdf_diff) return family.log_cdf_diff(x, w);
    return family.log_cdf(x + w) - family.log_cdf(x);
}

// Residual of branch X0 in log space: log G(x) - log alpha - log G(x+theta).
// Negative left of the root, positive right of it; stays meaningful however
// far below zero the root sits.
double x0_residual(const LocationFamily& family, double alpha, double theta, double x) {
    return -log_cdf_difference(family, x, theta) - std::log(alpha);
}

double solve_x0(const LocationFamily& family, double alpha, double z_max, double theta) {
    double lo = -z_max;
    while (x0_residual(family, alpha, theta, lo) >= 0.0) {
        lo *= 2.0;
        if (lo < -1e18) throw RootNotBracketed("x0: residual never changes sign");
    }
    return detail::bisect(
        [&](double x) { return x0_residual(family, alpha, theta, x); }, lo, 0.0, 1e-13);
}

double solve_x1(const LocationFamily& family, double alpha, const FamilyConstants& c,
                double theta) {
    const auto residual = [&](double x) {
        return 2.0 * family.cdf(x) - 1.0 - (1.0 - alpha) * family.cdf(x + theta);
    };
    const double pad0 = 1e-9 * (1.0 + std::abs(c.d0));
    const double pad1 = 1e-9 * (1.0 + std::abs(c.d1));
    return detail::bisect(residual, c.d0 - pad0, c.d1 + pad1, 1e-13);
}

double solve_x2(const LocationFamily& family, double alpha, const FamilyConstants& c,
                double theta) {
    const auto residual = [&](double x) {
        return 1.0 - 2.0 * family.cdf(x) - (1.0 - alpha) * family.cdf(x + theta);
    };
    const double pad0 = 1e-9 * (1.0 + std::abs(c.d0));
    const double pad1 = 1e-9 * (1.0 + std::abs(c.d1));
    return detail::bisect(residual, -c.d1 - pad1, -c.d0 + pad0, 1e-13);
}

double relative_slack(double v) { return 1e-9 * (1.0 + std::abs(v)); }

}  // namespace

double solve_boundary(const LocationFamily& family, Alpha alpha, const FamilyConstants& c,
                      Branch branch, double theta) {
    require_logconcave(family);
    const double a = alpha.value();
    switch (branch) {
        case Branch::X0:
            if (!(theta > c.tail_limit) || theta > c.two_d0 + relative_slack(c.two_d0))
                throw OutOfRegion("x0 is defined for theta in (a, 2 d0]");
            return solve_x0(family, a, tail_cutoff(family), theta);
        case Branch::X1:
            if (theta < 0.0) throw OutOfRegion("x1 is defined for theta >= 0");
            return solve_x1(family, a, c, theta);
        case Branch::X2:
            if (theta < c.two_d0 - relative_slack(c.two_d0))
                throw OutOfRegion("x2 is defined for theta >= 2 d0");
            return solve_x2(family, a, c, theta);
    }
    throw OutOfRegion("unknown branch");
}

double solve_boundary(const LocationFamily& family, Alpha alpha, Branch branch, double theta) {
    require_logconcave(family);
    return solve_boundary(family, alpha, family_constants(family, alpha), branch, theta);
}

double coverage_drop_at_a(const LocationFamily& family, Alpha alpha,
                          const FamilyConstants& c) {
    require_logconcave(family);
    const double a = c.tail_limit;
    if (a <= 0.0) return 0.0;

    // The jump equals G(x_hat - a) where x_hat is the largest observation
    // whose interval upper endpoint still equals a; no jump when the upper
    // endpoint stays strictly above a everywhere.
    const auto upper_at_most_a = [&](double x) {
        return log_cdf_difference(family, x, -a) <= std::log(alpha.value());
    };
    double lo = -(tail_cutoff(family) + a);
    if (!upper_at_most_a(lo)) return 0.0;  // any remaining jump is < 1e-9
    double hi = c.d0;                      // u(d0) = 2 d0 > a
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (upper_at_most_a(mid))
            lo = mid;
        else
            hi = mid;
    }
    return family.cdf(0.5 * (lo + hi) - a);
}

double coverage_drop_at_a(const LocationFamily& family, Alpha alpha) {
    require_logconcave(family);
    return coverage_drop_at_a(family, alpha, family_constants(family, alpha));
}

CoveragePoint coverage_exact(const LocationFamily& family, Alpha alpha,
                             const FamilyConstants& c, double theta) {
    require_logconcave(family);
    if (theta < 0.0) throw OutOfRegion("coverage is defined for theta >= 0");
    CoveragePoint pt;
    pt.theta = theta;
    if (theta <= c.tail_limit) {
        pt.region = Region::BelowA;
        pt.coverage = family.cdf(solve_x1(family, c.alpha, c, theta));
        if (c.tail_limit > 0.0 && theta == c.tail_limit)
            pt.drop = coverage_drop_at_a(family, alpha, c);
        return pt;
    }
    const double g_x1 = family.cdf(solve_x1(family, c.alpha, c, theta));
    if (theta <= c.two_d0) {
        pt.region = Region::Mid;
        pt.coverage = g_x1 - family.cdf(solve_x0(family, c.alpha, tail_cutoff(family), theta));
        return pt;
    }
    pt.region = Region::Above2d0;
    pt.coverage = g_x1 - family.cdf(solve_x2(family, c.alpha, c, theta));
    return pt;
}

CoveragePoint coverage_exact(const LocationFamily& family, Alpha alpha, double theta) {
    require_logconcave(family);
    return coverage_exact(family, alpha, family_constants(family, alpha), theta);
}

double coverage_via_inversion(const LocationFamily& family, Alpha alpha, double theta) {
    require_logconcave(family);
    if (theta < 0.0) throw OutOfRegion("coverage is defined for theta >= 0");
    const double a_val = alpha.value();
    const FamilyConstants c = family_constants(family, alpha);

    const auto upper = [&](double x) {
        return credible_interval(family, alpha, x).upper;
    };
    const auto lower = [&](double x) {
        if (x <= c.d0) return 0.0;
        return x - family.inv_cdf(0.5 + 0.5 * (1.0 - a_val) * family.cdf(x));
    };

    // l^{-1}(theta) = sup{x : l(x) <= theta}; l vanishes up to d0 and then
    // increases strictly, so the sup is d0 at theta = 0.
    double l_inv;
    if (theta == 0.0) {
        l_inv = c.d0;
    } else {
        const double hi = c.d0 + theta + c.d1 + 1.0;
        l_inv = detail::bisect([&](double x) { return lower(x) - theta; }, c.d0, hi, 1e-13);
    }

    const double g_left = family.cdf(l_inv - theta);
    if (theta <= c.tail_limit) return g_left;  // u^{-1}(theta) = -inf

    // u^{-1}(theta): expand downward until u < theta; once G at the probe is
    // below e^{-60} the term cannot matter.
    double u_lo = -1.0;
    bool negligible = false;
    while (upper(u_lo) >= theta) {
        u_lo *= 2.0;
        if (family.log_cdf(u_lo) < -60.0) {
            negligible = true;
            break;
        }
    }
    if (negligible) return g_left;
    double u_hi = std::max(c.d0, theta) + 1.0;
    const double u_inv =
        detail::bisect([&](double x) { return upper(x) - theta; }, u_lo, u_hi, 1e-13);
    return g_left - family.cdf(u_inv - theta);
}

double boundary_derivative(const LocationFamily& family, Alpha alpha, Branch branch,
                           double theta) {
    require_logconcave(family);
    const double a = alpha.value();
    const FamilyConstants c = family_constants(family, alpha);
    if (theta < c.d1 - relative_slack(c.d1) || theta > c.two_d0 + relative_slack(c.two_d0))
        throw OutOfRegion("boundary derivatives are taken on [d1, 2 d0]");
    if (branch == Branch::X1) {
        const double x = solve_x1(family, a, c, theta);
        const double num = (1.0 - a) * family.pdf(x + theta);
        return num / (2.0 * family.pdf(x) - num);
    }
    if (branch == Branch::X0) {
        // Routed through the gated solve: at theta = d1 = a (Laplace) the
        // slope diverges and the x0 equation has no bracketed root.
        const double x = solve_boundary(family, alpha, c, Branch::X0, theta);
        const double num = a * family.pdf(x + theta);
        return num / (family.pdf(x) - num);
    }
    throw OutOfRegion("derivative formulas exist for x0 and x1 only");
}

const char* to_string(Region region) {
    switch (region) {
        case Region::BelowA: return "below_a";
        case Region::Mid: return "mid";
        case Region::Above2d0: return "above_2d0";
    }
    return "?";
}

const char* to_string(Side side) {
    switch (side) {
        case Side::None: return "";
        case Side::Left: return "left";
        case Side::Right: return "right";
    }
    return "?";
}

CoverageCurve coverage_curve(const LocationFamily& family, Alpha alpha, double theta_max,
                             int n_points) {
    require_logconcave(family);
    if (n_points < 16) throw InvalidRequest("coverage_curve: n_points must be >= 16");
    if (!(theta_max > 0.0)) throw InvalidRequest("coverage_curve: theta_max must be positive");

    const FamilyConstants c = family_constants(family, alpha);

    // Landmarks are deduplicated with the tail limit taking priority: for a
    // family like the Laplace, a, d1 and d2 coincide mathematically but not
    // bit for bit, and the jump bookkeeping keys on the exact tail limit.
    std::vector<double> landmarks;
    for (double candidate : {c.tail_limit, 0.0, c.d1, c.d2, c.two_d0}) {
        if (candidate < 0.0 || candidate > theta_max) continue;
        const bool dup = std::any_of(landmarks.begin(), landmarks.end(), [&](double v) {
            return std::abs(v - candidate) <= 1e-9 * (1.0 + std::abs(v));
        });
        if (!dup) landmarks.push_back(candidate);
    }

    std::vector<double> thetas = landmarks;
    thetas.reserve(static_cast<size_t>(n_points) + 40);
    const auto push_unless_landmark = [&](double t) {
        if (t < 0.0 || t > theta_max) return;
        for (double v : landmarks)
            if (std::abs(t - v) <= 1e-12 * (1.0 + std::abs(v))) return;
        thetas.push_back(t);
    };
    for (int i = 0; i < n_points; ++i)
        push_unless_landmark(theta_max * static_cast<double>(i) / (n_points - 1));
    // The minimum at 2 d0 and the jump at a are the interesting features;
    // sample them a little harder.
    for (double landmark : {c.tail_limit, c.d1, c.two_d0})
        for (int k = 1; k <= 5; ++k)
            for (double s : {-1.0, 1.0}) push_unless_landmark(landmark + s * 0.01 * k);
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(),
                             [](double p, double q) { return std::abs(p - q) < 1e-12; }),
                 thetas.end());

    CoverageCurve curve;
    curve.family_name = family.name;
    curve.alpha = alpha.value();
    curve.constants = c;
    curve.points.resize(thetas.size());

    std::atomic<bool> failed{false};
    std::exception_ptr error;
    parallel_for(thetas.size(), [&](size_t i) {
        try {
            curve.points[i] = coverage_exact(family, alpha, c, thetas[i]);
        } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
        }
    });
    if (failed) std::rethrow_exception(error);

    if (c.tail_limit > 0.0 && c.tail_limit <= theta_max) {
        const auto at_a = std::find_if(curve.points.begin(), curve.points.end(),
                                       [&](const CoveragePoint& p) {
                                           return p.theta == c.tail_limit;
                                       });
        if (at_a != curve.points.end() && at_a->drop > 0.0) {
            at_a->side = Side::Left;
            CoveragePoint right;
            right.theta = c.tail_limit;
            right.coverage = at_a->coverage - at_a->drop;
            right.region = Region::Mid;
            right.side = Side::Right;
            curve.points.insert(at_a + 1, right);
        }
    }
    return curve;
}

McEstimate coverage_mc(const LocationFamily& family, Alpha alpha, double theta,
                       std::uint64_t n, std::uint64_t seed) {
    if (n < 1000) throw InvalidRequest("coverage_mc: n must be >= 1000");
    if (theta < 0.0) throw OutOfRegion("coverage is defined for theta >= 0");

    const CounterRng rng(seed);
    const unsigned workers = thread_count();
    const std::uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::uint64_t> hits(workers, 0);
    parallel_for(workers, [&](size_t w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(n, begin + chunk);
        std::uint64_t h = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const double x = theta + family.inv_cdf(rng.uniform(i));
            h += interval_contains(family, alpha, x, theta) ? 1 : 0;
        }
        hits[w] = h;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;

    McEstimate est;
    est.theta = theta;
    est.n = n;
    est.seed = seed;
    est.mean = static_cast<double>(total) / static_cast<double>(n);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(n));
    return est;
}

}  // namespace hpdcover
