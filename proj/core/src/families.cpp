#include "hpdcover/families.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <memory>

#include "hpdcover/errors.hpp"

namespace hpdcover {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn4 = 1.3862943611198906;

LocationFamily make_normal() {
    LocationFamily f;
    f.name = "normal";
    f.pdf = [](double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); };
    f.cdf = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    f.survival = [](double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); };
    f.inv_cdf = [](double p) { return detail::normal_quantile(p); };
    f.log_pdf = [](double z) { return -0.5 * z * z - 0.5 * std::log(2.0 * M_PI); };
    f.log_cdf = [](double z) { return detail::normal_log_cdf(z); };
    f.log_cdf_diff = [](double x, double w) { return detail::normal_log_cdf_diff(x, w); };
    f.is_logconcave = true;
    f.tail_limit_rule = [](double) { return 0.0; };  // unbounded (-log g)'
    return f;
}

LocationFamily make_laplace() {
    LocationFamily f;
    f.name = "laplace";
    f.pdf = [](double z) { return 0.5 * std::exp(-std::abs(z)); };
    f.cdf = [](double z) {
        return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
    };
    f.survival = [](double z) {
        return z > 0.0 ? 0.5 * std::exp(-z) : 1.0 - 0.5 * std::exp(z);
    };
    f.inv_cdf = [](double p) {
        return p < 0.5 ? std::log(2.0 * p) : -std::log(2.0 * (1.0 - p));
    };
    f.log_pdf = [](double z) { return -std::abs(z) - kLn2; };
    f.log_cdf = [](double z) {
        return z <= 0.0 ? z - kLn2 : std::log1p(-0.5 * std::exp(-z));
    };
    f.log_cdf_diff = [lc = f.log_cdf](double x, double w) {
        if (x <= 0.0 && x + w <= 0.0) return w;  // log G is linear there
        return lc(x + w) - lc(x);
    };
    f.is_logconcave = true;
    f.tail_limit_rule = [](double alpha) { return -std::log(alpha); };
    return f;
}

// g(z) = (|z|+1) e^{-|z|} / 4, with exact antiderivative
// G(z) = 1 - (z+2) e^{-z} / 4 for z >= 0.
double polyexp_upper_tail(double z) {  // survival on z >= 0
    return 0.25 * (z + 2.0) * std::exp(-z);
}

double polyexp_inv_upper(double tail_p) {
    // Solves (z+2) e^{-z} / 4 = tail_p on z >= 0 for tail_p <= 1/2.
    // In log form: r(z) = log(z+2) - z - log(4 tail_p), decreasing and concave.
    const double target = std::log(4.0 * tail_p);
    double z = std::max(0.0, -target);
    for (int it = 0; it < 60; ++it) {
        const double r = std::log(z + 2.0) - z - target;
        const double step = r * (z + 2.0) / (z + 1.0);  // r / |r'|
        z = std::max(0.0, z + step);
        if (std::abs(step) <= 1e-15 * (1.0 + z)) break;
    }
    return z;
}

LocationFamily make_polyexp() {
    LocationFamily f;
    f.name = "polyexp";
    f.pdf = [](double z) { return 0.25 * (std::abs(z) + 1.0) * std::exp(-std::abs(z)); };
    f.cdf = [](double z) {
        return z < 0.0 ? polyexp_upper_tail(-z) : 1.0 - polyexp_upper_tail(z);
    };
    f.survival = [](double z) {
        return z > 0.0 ? polyexp_upper_tail(z) : 1.0 - polyexp_upper_tail(-z);
    };
    f.inv_cdf = [](double p) {
        return p < 0.5 ? -polyexp_inv_upper(p) : polyexp_inv_upper(1.0 - p);
    };
    f.log_pdf = [](double z) { return std::log1p(std::abs(z)) - std::abs(z) - kLn4; };
    f.log_cdf = [](double z) {
        return z <= 0.0 ? z + std::log(2.0 - z) - kLn4
                        : std::log1p(-polyexp_upper_tail(z));
    };
    f.log_cdf_diff = [lc = f.log_cdf](double x, double w) {
        if (x <= 0.0 && x + w <= 0.0) return w + std::log1p(-w / (2.0 - x));
        return lc(x + w) - lc(x);
    };
    f.is_logconcave = true;
    f.tail_limit_rule = [](double alpha) { return -std::log(alpha); };
    return f;
}

LocationFamily make_student(double dof) {
    auto dist = std::make_shared<boost::math::students_t_distribution<double>>(dof);
    LocationFamily f;
    f.name = "student:" + [&] {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", dof);
        return std::string(buf);
    }();
    f.pdf = [dist](double z) { return boost::math::pdf(*dist, z); };
    f.cdf = [dist](double z) { return boost::math::cdf(*dist, z); };
    f.survival = [dist](double z) { return boost::math::cdf(boost::math::complement(*dist, z)); };
    f.inv_cdf = [dist](double p) { return boost::math::quantile(*dist, p); };
    f.log_pdf = [dof](double z) {
        return std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
               0.5 * std::log(dof * M_PI) -
               0.5 * (dof + 1.0) * std::log1p(z * z / dof);
    };
    f.log_cdf = [dist](double z) { return std::log(boost::math::cdf(*dist, z)); };
    f.is_logconcave = false;  // polynomial tails; u(x) diverges as x -> -inf
    return f;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    if (text == "normal") return {FamilyKind::Normal, std::nullopt};
    if (text == "laplace") return {FamilyKind::Laplace, std::nullopt};
    if (text == "polyexp") return {FamilyKind::PolyExp, std::nullopt};
    if (text.rfind("student:", 0) == 0) {
        const std::string dof_text = text.substr(8);
        double dof = 0.0;
        size_t used = 0;
        try {
            dof = std::stod(dof_text, &used);
        } catch (const std::exception&) {
            throw UnsupportedSpec("bad student dof: '" + dof_text + "'");
        }
        if (used != dof_text.size() || !(dof >= 1.0))
            throw UnsupportedSpec("student dof must be a real number >= 1");
        return {FamilyKind::StudentT, dof};
    }
    throw UnsupportedSpec("unknown family '" + text +
                          "' (expected normal, laplace, polyexp, student:<dof>)");
}

LocationFamily make_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Normal:
            return make_normal();
        case FamilyKind::Laplace:
            return make_laplace();
        case FamilyKind::PolyExp:
            return make_polyexp();
        case FamilyKind::StudentT:
            if (!spec.dof || !(*spec.dof >= 1.0))
                throw UnsupportedSpec("student family needs dof >= 1");
            return make_student(*spec.dof);
    }
    throw UnsupportedSpec("unknown family kind");
}

}  // namespace hpdcover
