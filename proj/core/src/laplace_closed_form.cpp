#include "hpdcover/laplace_closed_form.hpp"

#include <cmath>

#include "hpdcover/errors.hpp"

namespace hpdcover {

LaplaceConstants laplace_constants(Alpha alpha) {
    const double a = alpha.value();
    LaplaceConstants c;
    c.a = -std::log(a);
    c.d0 = std::log((1.0 + a) / (2.0 * a));
    c.d1 = c.a;
    c.two_d0 = 2.0 * c.d0;
    return c;
}

double laplace_coverage_closed(Alpha alpha, double theta) {
    if (theta < 0.0) throw OutOfRegion("coverage is defined for theta >= 0");
    const double a = alpha.value();
    const LaplaceConstants c = laplace_constants(alpha);
    const double et = std::exp(-theta);

    // 1 - a e^t / (2 e^t - (1-a)), written overflow-free.
    const double first = 1.0 - a / (2.0 - (1.0 - a) * et);
    if (theta <= c.a) return first;

    if (theta <= c.two_d0) {
        const double disc = a * a - a * et;
        if (disc < -1e-15 * a * a)
            throw NegativeDiscriminant("laplace_coverage_closed: negative discriminant");
        // a e^{-t} / (2 (a - sqrt(disc))) == (a + sqrt(disc)) / 2
        return first - 0.5 * (a + std::sqrt(std::max(0.0, disc)));
    }

    const double disc = a * a + 2.0 * (1.0 - a) * et;
    // (1-a) e^{-t} / (2 (sqrt(disc) - a)) == (sqrt(disc) + a) / 4
    return first - 0.25 * (std::sqrt(disc) + a);
}

}  // namespace hpdcover
