#pragma once

// Independent numeric oracles used only by tests. These deliberately avoid
// the library's own solvers: quantiles come from plain bisection on a cdf
// callable, integrals from composite Simpson, derivatives from central
// differences.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracles {

// Bisection quantile on any monotone cdf, bracket grown from [-1, 1].
inline double bisect_quantile(const std::function<double(double)>& cdf, double p,
                              double tol = 1e-13) {
    double lo = -1.0, hi = 1.0;
    while (cdf(lo) > p) lo *= 2.0;
    while (cdf(hi) < p) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Composite Simpson with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2 != 0) throw std::invalid_argument("simpson: n must be even");
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
