#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpdcover/family.hpp"
#include "hpdcover/interval.hpp"

namespace hpdcover {

/// The three boundary curves behind the piecewise coverage function, each
/// defined implicitly in terms of the cdf G:
///   X0:   G(x) = alpha G(x + theta)            theta in (a, 2 d0]
///   X1:   2 G(x) - 1 = (1 - alpha) G(x + theta)   theta >= 0
///   X2:   1 - 2 G(x) = (1 - alpha) G(x + theta)   theta >= 2 d0
enum class Branch { X0, X1, X2 };

/// Which piece of the coverage function a point belongs to.
enum class Region { BelowA, Mid, Above2d0 };

/// One-sided tags for the jump at theta = a (when the tail limit a is
/// positive and the upper endpoint attains it, coverage drops there).
enum class Side { None, Left, Right };

struct CoveragePoint {
    double theta = 0.0;
    double coverage = 0.0;
    Region region = Region::BelowA;
    Side side = Side::None;
    double drop = 0.0;  // size of the jump at theta = a; 0 elsewhere
};

struct CoverageCurve {
    std::string family_name;
    double alpha = 0.0;
    FamilyConstants constants;
    std::vector<CoveragePoint> points;  // ordered by theta, Left before Right
};

struct McEstimate {
    double theta = 0.0;
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

/// Root of the branch's implicit equation at the given theta, solved by
/// bisection on a bracket guaranteed by the boundary values of the three
/// curves (X1 in [d0, d1], X2 in [-d1, -d0], X0 expanding below zero).
/// Throws OutOfRegion when theta violates the branch's domain.
double solve_boundary(const LocationFamily& family, Alpha alpha, Branch branch, double theta);
double solve_boundary(const LocationFamily& family, Alpha alpha, const FamilyConstants& c,
                      Branch branch, double theta);

/// Exact coverage at theta:
///   G(x1)          on [0, a]
///   G(x1) - G(x0)  on (a, 2 d0]
///   G(x1) - G(x2)  above 2 d0
/// At theta = a with a > 0 the returned value is the left limit and the
/// point's drop field carries the size of the downward jump.
CoveragePoint coverage_exact(const LocationFamily& family, Alpha alpha, double theta);
CoveragePoint coverage_exact(const LocationFamily& family, Alpha alpha,
                             const FamilyConstants& c, double theta);

/// Size of the downward jump of the coverage at theta = a: the limit from
/// above of G(x0(theta)). Zero when a = 0 or when the interval's upper
/// endpoint never attains a at finite observations.
double coverage_drop_at_a(const LocationFamily& family, Alpha alpha);
double coverage_drop_at_a(const LocationFamily& family, Alpha alpha, const FamilyConstants& c);

/// Coverage computed by inverting the interval endpoint maps l and u
/// directly: G(l^{-1}(theta) - theta) - G(u^{-1}(theta) - theta), with the
/// second term zero for theta <= a. Independent computation path that must
/// agree with coverage_exact to 1e-9.
double coverage_via_inversion(const LocationFamily& family, Alpha alpha, double theta);

/// Closed-form derivative of x1 or x0 on [d1, 2 d0]:
///   x1'(theta) = (1-alpha) g(x1+theta) / (2 g(x1) - (1-alpha) g(x1+theta))
///   x0'(theta) =  alpha    g(x0+theta) / (  g(x0) -  alpha    g(x0+theta))
double boundary_derivative(const LocationFamily& family, Alpha alpha, Branch branch,
                           double theta);

/// Coverage over a grid on [0, theta_max] that always contains the
/// landmarks {0, a, d1, d2, 2 d0} exactly, refines near {a, d1, 2 d0}, and
/// stores both one-sided values at theta = a when a > 0.
CoverageCurve coverage_curve(const LocationFamily& family, Alpha alpha, double theta_max,
                             int n_points);

/// Monte Carlo coverage estimate: n draws X = theta + G^{-1}(U) on the
/// counter-based stream for (seed), counting draws whose credible interval
/// contains theta. Deterministic for fixed (seed, n), independent of
/// execution order.
McEstimate coverage_mc(const LocationFamily& family, Alpha alpha, double theta,
                       std::uint64_t n, std::uint64_t seed);

const char* to_string(Region region);
const char* to_string(Side side);

}  // namespace hpdcover
