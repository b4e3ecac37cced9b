#pragma once

#include "hpdcover/family.hpp"

namespace hpdcover {

/// Miscoverage level. The credible interval has posterior mass 1 - alpha.
class Alpha {
  public:
    explicit Alpha(double value);
    double value() const { return value_; }

  private:
    double value_;
};

/// The credible interval [lower, upper] for one observation; always a
/// subset of [0, inf).
struct CredibleInterval {
    double lower = 0.0;
    double upper = 0.0;
};

/// Quantile constants of a (family, alpha) pair.
///
///   d0        = quantile(1/(1+alpha))
///   d1        = quantile(1 - alpha/2)
///   d2        = quantile(1 - alpha^2/(1+alpha)) - d0
///   two_d0    = 2 d0, where the coverage attains its minimum
///   tail_limit(a) = limit of the interval's upper endpoint as x -> -inf
struct FamilyConstants {
    double d0 = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double two_d0 = 0.0;
    double tail_limit = 0.0;
    double alpha = 0.0;
};

enum class NonLogconcavePolicy { Refuse, Allow };

/// The highest-posterior-density interval for the flat prior truncated to
/// [0, inf):
///   x <= d0 : [0, x - quantile(alpha G(x))]
///   x >  d0 : [x - q, x + q] with q = quantile(1/2 + (1-alpha)/2 G(x))
///
/// Both endpoints are continuous in x and the lower one is never negative.
/// Families flagged non-logconcave are refused unless explicitly allowed
/// (the coverage theory downstream does not apply to them).
CredibleInterval credible_interval(const LocationFamily& family, Alpha alpha, double x,
                                   NonLogconcavePolicy policy = NonLogconcavePolicy::Refuse);

/// Limit of the interval's upper endpoint as the observation goes to
/// -infinity. Uses the family's analytic rule when declared; otherwise
/// probes x = -10, -20, -40, ... until two successive values agree to 1e-9.
/// Throws LimitDiverged when the probes increase (non-logconcave tails).
double tail_limit(const LocationFamily& family, Alpha alpha);

/// All five constants for a (family, alpha) pair.
FamilyConstants family_constants(const LocationFamily& family, Alpha alpha);

/// Exact posterior probability of the computed interval,
/// [G(u-x) - G(l-x)] / G(x), evaluated cancellation-free. Equals 1 - alpha
/// up to root-solver tolerance for every x: the exact-credibility oracle.
double posterior_mass(const LocationFamily& family, Alpha alpha, double x);

/// True iff theta lies in the credible interval for observation x.
/// Algebraically identical to l(x) <= theta <= u(x) but needs only cdf
/// comparisons, which keeps Monte Carlo loops cheap.
bool interval_contains(const LocationFamily& family, Alpha alpha, double x, double theta);

namespace detail {

// u(x) - x for x <= d0, solved in log-cdf space so observations far in the
// lower tail neither underflow nor lose precision to cancellation.
double upper_offset_below_d0(const LocationFamily& family, double alpha, double x);

}  // namespace detail

}  // namespace hpdcover
