#include "hpdcover/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hpdcover/errors.hpp"

namespace hpdcover {

namespace detail {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo > 0.0 && fhi > 0.0)
        throw RootNotBracketed("bisect: both endpoints positive");
    if (flo < 0.0 && fhi < 0.0)
        throw RootNotBracketed("bisect: both endpoints negative");
    if (flo > 0.0) {  // keep the invariant f(lo) <= 0 <= f(hi)
        std::swap(lo, hi);
        std::swap(flo, fhi);
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (std::abs(hi - lo) <= x_tol * std::max(1.0, std::abs(mid))) return mid;
        const double fm = f(mid);
        if (fm <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

// Phi(z) = phi(z)/|z| * S(z) with S(z) = 1 - 1/z^2 + 3/z^4 - ..., z -> -inf
double normal_tail_log_series(double z) {
    const double u = 1.0 / (z * z);
    const double series =
        1.0 + u * (-1.0 + u * (3.0 + u * (-15.0 + u * (105.0 + u * (-945.0 + u * 10395.0)))));
    return std::log(series);
}

}  // namespace

double normal_log_cdf(double z) {
    if (z > -37.0) {
        // erfc stays normal down to about z = -37.5
        return std::log(0.5 * std::erfc(-z / std::sqrt(2.0)));
    }
    return -0.5 * z * z - 0.5 * std::log(2.0 * M_PI) - std::log(-z) +
           normal_tail_log_series(z);
}

double normal_log_cdf_diff(double x, double w) {
    if (x > -20.0 || x + w > -20.0) return normal_log_cdf(x + w) - normal_log_cdf(x);
    // Expanded so the leading -z^2/2 terms never cancel:
    //   log Phi(x+w) - log Phi(x) = -x w - w^2/2 - log1p(w/x) + log S(x+w) - log S(x)
    return -x * w - 0.5 * w * w - std::log1p(w / x) +
           normal_tail_log_series(x + w) - normal_tail_log_series(x);
}

namespace {

// Wichura's algorithm AS 241 (PPND16), parametrized by r = sqrt(-log(min(p,1-p)))
// for the tail branches so it can be driven from log-space input as well.
double as241_central(double q) {
    // |q| <= 0.425, q = p - 0.5
    static const double a[8] = {3.3871328727963666080e0,  1.3314166789178437745e2,
                                1.9715909503065514427e3,  1.3731693765509461125e4,
                                4.5921953931549871457e4,  6.7265770927008700853e4,
                                3.3430575583588128105e4,  2.5090809287301226727e3};
    static const double b[8] = {1.0,
                                4.2313330701600911252e1,
                                6.8718700749205790830e2,
                                5.3941960214247511077e3,
                                2.1213794301586595867e4,
                                3.9307895800092710610e4,
                                2.8729085735721942674e4,
                                5.2264952788528545610e3};
    const double r = 0.180625 - q * q;
    double num = a[7], den = b[7];
    for (int i = 6; i >= 0; --i) {
        num = num * r + a[i];
        den = den * r + b[i];
    }
    return q * num / den;
}

double as241_tail(double r) {
    // r = sqrt(-log(p_tail)), valid for r > 1.6; returns the magnitude of z.
    static const double c[8] = {1.42343711074968357734e0,  4.63033784615654529590e0,
                                5.76949722146069140550e0,  3.64784832476320460504e0,
                                1.27045825245236838258e0,  2.41780725177450611770e-1,
                                2.27238449892691845833e-2, 7.74545014278341407640e-4};
    static const double d[8] = {1.0,
                                2.05319162663775882187e0,
                                1.67638483018380384940e0,
                                6.89767334985100004550e-1,
                                1.48103976427480074590e-1,
                                1.51986665636164571966e-2,
                                5.47593808499534494600e-4,
                                1.05075007164441684324e-9};
    static const double e[8] = {6.65790464350110377720e0,  5.46378491116411436990e0,
                                1.78482653991729133580e0,  2.96560571828504891230e-1,
                                2.65321895265761230930e-2, 1.24266094738807843860e-3,
                                2.71155556874348757815e-5, 2.01033439929228813265e-7};
    static const double f[8] = {1.0,
                                5.99832206555887937690e-1,
                                1.36929880922735805310e-1,
                                1.48753612908506148525e-2,
                                7.86869131145613259100e-4,
                                1.84631831751005468180e-5,
                                1.42151175831644588870e-7,
                                2.04426310338993978564e-15};
    const double* num_c;
    const double* den_c;
    double s;
    if (r <= 5.0) {
        num_c = c;
        den_c = d;
        s = r - 1.6;
    } else {
        num_c = e;
        den_c = f;
        s = r - 5.0;
    }
    double num = num_c[7], den = den_c[7];
    for (int i = 6; i >= 0; --i) {
        num = num * s + num_c[i];
        den = den * s + den_c[i];
    }
    return num / den;
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw InvalidProbability("normal_quantile: p must lie in (0,1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) return as241_central(q);
    const double tail = std::min(p, 1.0 - p);
    const double z = as241_tail(std::sqrt(-std::log(tail)));
    return q < 0.0 ? -z : z;
}

double normal_quantile_from_log(double log_p) {
    if (!(log_p < 0.0))
        throw InvalidProbability("normal_quantile_from_log: log p must be negative");
    if (log_p > std::log(0.075)) return normal_quantile(std::exp(log_p));
    const double r = std::sqrt(-log_p);
    if (r <= 27.0) return -as241_tail(r);
    // Beyond the rational approximation's range: Newton on log Phi(z) = log_p,
    // started from the asymptotic inversion of -z^2/2 - log(-z sqrt(2 pi)).
    const double s = -2.0 * log_p;
    double z = -std::sqrt(std::max(1.0, s - std::log(2.0 * M_PI) - std::log(s)));
    for (int it = 0; it < 8; ++it) {
        const double log_phi_pdf = -0.5 * z * z - 0.5 * std::log(2.0 * M_PI);
        const double deriv = std::exp(log_phi_pdf - normal_log_cdf(z));  // phi/Phi
        const double step = (normal_log_cdf(z) - log_p) / deriv;
        z -= step;
        if (std::abs(step) < 1e-12 * std::abs(z)) break;
    }
    return z;
}

}  // namespace detail

double tail_cutoff(const LocationFamily& family) {
    constexpr double target = 1e-9;
    constexpr double cap = 40.0;
    if (family.survival(cap) >= target) return cap;
    double lo = 0.0, hi = cap;  // survival(lo) >= target > survival(hi)
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (family.survival(mid) < target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double inv_cdf_numeric(const LocationFamily& family, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw InvalidProbability("inv_cdf_numeric: p must lie in (0,1)");

    double lo = -1.0, hi = 1.0;
    constexpr double z_limit = 745.0;
    while (family.cdf(lo) > p) {
        lo *= 2.0;
        if (lo < -z_limit) throw BracketFailure("inv_cdf_numeric: no lower bracket within |z| <= 745");
    }
    while (family.cdf(hi) < p) {
        hi *= 2.0;
        if (hi > z_limit) throw BracketFailure("inv_cdf_numeric: no upper bracket within |z| <= 745");
    }
    return detail::bisect([&](double z) { return family.cdf(z) - p; }, lo, hi);
}

double hazard(const LocationFamily& family, double z) {
    const double s = family.survival(z);
    if (s <= 0.0) throw DegenerateTail("hazard: survival underflowed to zero");
    return family.pdf(z) / s;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return g;
}

// Worst (most positive) violation of "values are nonincreasing".
double worst_increase(const std::vector<double>& v) {
    double worst = 0.0;
    for (size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i] - v[i - 1]);
    return worst;
}

// Worst violation of concavity measured by discrete second differences.
double worst_second_difference(const std::vector<double>& v) {
    double worst = 0.0;
    for (size_t i = 1; i + 1 < v.size(); ++i)
        worst = std::max(worst, v[i + 1] - 2.0 * v[i] + v[i - 1]);
    return worst;
}

}  // namespace

DiagnosticReport diagnose_family(const LocationFamily& family, int n_grid) {
    if (n_grid < 64) throw InvalidRequest("diagnose_family: n_grid must be >= 64");

    const double z_max = tail_cutoff(family);
    DiagnosticReport report;
    {
        std::ostringstream os;
        os << n_grid << " points over [-" << z_max << ", " << z_max << "]";
        report.grid = os.str();
    }
    const auto grid = linspace(-z_max, z_max, n_grid);
    const auto half_grid = linspace(0.0, z_max, n_grid);

    {
        double worst = 0.0;
        for (double z : half_grid)
            worst = std::max(worst, std::abs(family.cdf(z) + family.cdf(-z) - 1.0));
        report.checks.push_back({"symmetry", worst, worst <= 1e-12});
    }
    {
        double worst = 0.0;
        double prev = family.cdf(grid.front());
        for (size_t i = 1; i < grid.size(); ++i) {
            const double cur = family.cdf(grid[i]);
            worst = std::max(worst, prev - cur);
            prev = cur;
        }
        report.checks.push_back({"monotone_cdf", worst, worst <= 0.0});
    }
    {
        double worst = 0.0;
        for (double p : linspace(1e-8, 1.0 - 1e-8, n_grid)) {
            const double z = inv_cdf_numeric(family, p);
            worst = std::max(worst, std::abs(family.cdf(z) - p));
        }
        report.checks.push_back({"inverse_consistency", worst, worst <= 1e-10});
    }
    {
        std::vector<double> dens;
        dens.reserve(half_grid.size());
        for (double z : half_grid) dens.push_back(family.pdf(z));
        const double worst = worst_increase(dens);
        report.checks.push_back({"unimodal", worst, worst <= 1e-12});
    }
    {
        // Kink-aware composite trapezoid; half-million points keeps the
        // quadrature error below the truncated tail mass even for densities
        // with a corner at the mode.
        const int n_half = 1 << 18;
        const double h = z_max / n_half;
        double sum = 0.5 * (family.pdf(0.0) + family.pdf(z_max));
        for (int i = 1; i < n_half; ++i) sum += family.pdf(i * h);
        const double integral = 2.0 * sum * h;
        const double deficit = std::max(0.0, 1.0 - 1e-6 - integral);
        const double excess = std::max(0.0, integral - 1.0);
        const double worst = std::max(deficit, excess);
        report.checks.push_back({"normalization", worst, worst <= 0.0});
    }

    if (family.is_logconcave) {
        {
            std::vector<double> lp;
            lp.reserve(grid.size());
            for (double z : grid) lp.push_back(family.log_pdf(z));
            const double worst = worst_second_difference(lp);
            report.checks.push_back({"logconcave_pdf", worst, worst <= 1e-9});
        }
        {
            std::vector<double> lam;
            lam.reserve(grid.size());
            for (double z : grid) lam.push_back(hazard(family, z));
            double worst = 0.0;
            for (size_t i = 1; i < lam.size(); ++i)
                worst = std::max(worst, lam[i - 1] - lam[i]);
            report.checks.push_back({"hazard_nondecreasing", worst, worst <= 1e-10});
        }
        {
            std::vector<double> lc, ls;
            lc.reserve(half_grid.size());
            ls.reserve(half_grid.size());
            for (double z : half_grid) {
                lc.push_back(std::log(family.cdf(z)));
                ls.push_back(std::log(family.survival(z)));
            }
            const double worst_c = worst_second_difference(lc);
            const double worst_s = worst_second_difference(ls);
            report.checks.push_back({"logconcave_cdf", worst_c, worst_c <= 1e-9});
            report.checks.push_back({"logconcave_survival", worst_s, worst_s <= 1e-9});
        }
    }
    return report;
}

}  // namespace hpdcover
