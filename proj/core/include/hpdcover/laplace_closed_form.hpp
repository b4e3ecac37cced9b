#pragma once

#include "hpdcover/interval.hpp"

namespace hpdcover {

/// Closed-form constants of the standard Laplace model. For this family the
/// tail limit a coincides with d1.
struct LaplaceConstants {
    double a = 0.0;       // -log(alpha)
    double d0 = 0.0;      // log((1+alpha)/(2 alpha))
    double d1 = 0.0;      // -log(alpha)  (= a)
    double two_d0 = 0.0;  // 2 log((1+alpha)/(2 alpha))
};

LaplaceConstants laplace_constants(Alpha alpha);

/// Exact coverage of the Laplace model in closed form, three branches:
///   [0, -log(alpha)] , (-log(alpha), 2 d0] , (2 d0, inf).
/// Serves as the independent end-to-end oracle for the numeric engine.
double laplace_coverage_closed(Alpha alpha, double theta);

}  // namespace hpdcover
