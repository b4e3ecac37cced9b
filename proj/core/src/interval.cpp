#include "hpdcover/interval.hpp"

#include <cmath>

#include "hpdcover/errors.hpp"

namespace hpdcover {

Alpha::Alpha(double value) : value_(value) {
    // Quantile arguments such as alpha*G(x) and 1 - alpha^2/(1+alpha) must
    // stay solvable in double precision.
    if (!(value >= 1e-6 && value <= 1.0 - 1e-6))
        throw InvalidRequest("alpha must lie in [1e-6, 1-1e-6]");
}

namespace {

double log_cdf_difference(const LocationFamily& family, double x, double w) {
    if (family.log_cdf_diff) return family.log_cdf_diff(x, w);
    return family.log_cdf(x + w) - family.log_cdf(x);
}

}  // namespace

namespace detail {

double upper_offset_below_d0(const LocationFamily& family, double alpha, double x) {
    // Solve log G(x+w) - log G(x) = log alpha for w < 0; then u(x) = x - (x+w) = -w.
    const double target = std::log(alpha);
    const auto residual = [&](double w) { return log_cdf_difference(family, x, w) - target; };

    double lo = -1.0;
    while (residual(lo) >= 0.0) {
        lo *= 2.0;
        if (lo < -1e15)
            throw RootNotBracketed("upper endpoint offset: no bracket below x");
    }
    return detail::bisect(residual, lo, 0.0);
}

}  // namespace detail

CredibleInterval credible_interval(const LocationFamily& family, Alpha alpha, double x,
                                   NonLogconcavePolicy policy) {
    if (!family.is_logconcave && policy == NonLogconcavePolicy::Refuse)
        throw NonLogconcaveFamily(
            "family '" + family.name +
            "' is not logconcave; the coverage theory does not apply "
            "(pass the explicit override to explore it anyway)");

    const double a = alpha.value();
    const double d0 = family.inv_cdf(1.0 / (1.0 + a));
    if (x <= d0) {
        const double upper = -detail::upper_offset_below_d0(family, a, x);
        return {0.0, upper};
    }
    const double q = family.inv_cdf(0.5 + 0.5 * (1.0 - a) * family.cdf(x));
    return {std::max(0.0, x - q), x + q};
}

double tail_limit(const LocationFamily& family, Alpha alpha) {
    if (family.tail_limit_rule) {
        const double a = family.tail_limit_rule(alpha.value());
        return a < 1e-9 ? 0.0 : a;
    }
    double prev = -detail::upper_offset_below_d0(family, alpha.value(), -10.0);
    double x = -10.0;
    for (int k = 0; k < 40; ++k) {
        x *= 2.0;
        const double cur = -detail::upper_offset_below_d0(family, alpha.value(), x);
        if (cur > prev + 1e-12)
            throw LimitDiverged("upper endpoint increases as x -> -inf (family '" +
                                family.name + "' is not logconcave)");
        if (std::abs(cur - prev) < 1e-9) return cur < 1e-9 ? 0.0 : cur;
        prev = cur;
    }
    throw NumericFailure("tail limit probe did not converge");
}

FamilyConstants family_constants(const LocationFamily& family, Alpha alpha) {
    const double a = alpha.value();
    FamilyConstants c;
    c.alpha = a;
    c.d0 = family.inv_cdf(1.0 / (1.0 + a));
    c.d1 = family.inv_cdf(1.0 - 0.5 * a);
    c.d2 = family.inv_cdf(1.0 - a * a / (1.0 + a)) - c.d0;
    c.two_d0 = 2.0 * c.d0;
    c.tail_limit = tail_limit(family, alpha);
    if (c.tail_limit > c.d1 + 1e-9)
        throw NumericFailure("tail limit exceeds d1; coverage regions are inconsistent");
    return c;
}

double posterior_mass(const LocationFamily& family, Alpha alpha, double x) {
    const auto iv = credible_interval(family, alpha, x, NonLogconcavePolicy::Allow);
    const double a = alpha.value();
    const double d0 = family.inv_cdf(1.0 / (1.0 + a));
    if (x <= d0) {
        // [G(u-x) - G(-x)] / G(x) = 1 - G(x-u)/G(x), by symmetry of G.
        return 1.0 - std::exp(log_cdf_difference(family, x, -iv.upper));
    }
    const double q = iv.upper - x;
    return (1.0 - 2.0 * family.survival(q)) / family.cdf(x);
}

bool interval_contains(const LocationFamily& family, Alpha alpha, double x, double theta) {
    if (theta < 0.0) return false;
    const double a = alpha.value();
    const double d0 = family.inv_cdf(1.0 / (1.0 + a));
    if (x <= d0) {
        // theta <= u(x)  <=>  G(x - theta) >= alpha G(x)
        return log_cdf_difference(family, x, -theta) >= std::log(a);
    }
    // |theta - x| <= q  <=>  G(|theta - x|) <= 1/2 + (1-alpha)/2 G(x)
    return family.cdf(std::abs(theta - x)) <= 0.5 + 0.5 * (1.0 - a) * family.cdf(x);
}

}  // namespace hpdcover
