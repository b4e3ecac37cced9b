#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hpdcover/errors.hpp"
#include "hpdcover/families.hpp"
#include "oracles.hpp"

using namespace hpdcover;

TEST_CASE("parse_family_spec: the four CLI forms") {
    CHECK(parse_family_spec("normal").kind == FamilyKind::Normal);
    CHECK(parse_family_spec("laplace").kind == FamilyKind::Laplace);
    CHECK(parse_family_spec("polyexp").kind == FamilyKind::PolyExp);
    const auto student = parse_family_spec("student:3");
    CHECK(student.kind == FamilyKind::StudentT);
    CHECK(*student.dof == 3.0);
    CHECK(*parse_family_spec("student:2.5").dof == 2.5);
}

TEST_CASE("parse_family_spec: rejections") {
    CHECK_THROWS_AS((void)parse_family_spec("cauchy"), UnsupportedSpec);
    CHECK_THROWS_AS((void)parse_family_spec("student:"), UnsupportedSpec);
    CHECK_THROWS_AS((void)parse_family_spec("student:0.5"), UnsupportedSpec);
    CHECK_THROWS_AS((void)parse_family_spec("student:abc"), UnsupportedSpec);
    CHECK_THROWS_AS((void)make_family({FamilyKind::StudentT, {}}), UnsupportedSpec);
}

TEST_CASE("laplace: closed forms at the mode") {
    const auto f = make_family(parse_family_spec("laplace"));
    CHECK(f.cdf(0.0) == 0.5);
    CHECK(f.pdf(0.0) == 0.5);
}

TEST_CASE("laplace: cdf and quantile round-trip at closed-form precision") {
    const auto f = make_family(parse_family_spec("laplace"));
    for (double p : {0.001, 0.2, 0.5, 0.7, 0.975, 0.9999}) {
        CHECK(f.cdf(f.inv_cdf(p)) == doctest::Approx(p).epsilon(1e-14));
    }
    for (double z : {-7.0, -1.0, 0.0, 0.5, 4.0}) {
        CHECK(f.inv_cdf(f.cdf(z)) == doctest::Approx(z).epsilon(1e-14));
    }
}

TEST_CASE("polyexp: density integrates to one") {
    const auto f = make_family(parse_family_spec("polyexp"));
    // 2 * int_0^inf (z+1) e^{-z} / 4 dz = (Gamma(2) + Gamma(1)) / 2 = 1;
    // numerically: Simpson over [0, 60] doubled.
    const double half = oracles::simpson(f.pdf, 0.0, 60.0, 1 << 16);
    CHECK(2.0 * half == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("polyexp: cdf matches its antiderivative and quadrature") {
    const auto f = make_family(parse_family_spec("polyexp"));
    CHECK(f.cdf(1.0) == doctest::Approx(1.0 - 0.75 * std::exp(-1.0)).epsilon(1e-15));
    CHECK(f.cdf(1.0) == doctest::Approx(0.7241).epsilon(1e-4));
    for (double z : {-3.0, -0.7, 0.4, 2.0, 6.0}) {
        const double quad = 0.5 + oracles::simpson(f.pdf, 0.0, z, 1 << 14);
        CHECK(f.cdf(z) == doctest::Approx(quad).epsilon(1e-11));
    }
}

TEST_CASE("polyexp: quantile inverts the cdf") {
    const auto f = make_family(parse_family_spec("polyexp"));
    for (double p : {1e-8, 0.01, 0.3, 0.5, 0.72, 0.97, 1.0 - 1e-9}) {
        CHECK(f.cdf(f.inv_cdf(p)) == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("normal: cdf value behind d1 of the worked example") {
    const auto f = make_family(parse_family_spec("normal"));
    CHECK(f.cdf(1.645) == doctest::Approx(0.95).epsilon(1e-4));
}

TEST_CASE("polyexp: log-density is concave on the positive axis") {
    const auto f = make_family(parse_family_spec("polyexp"));
    const int n = 4096;
    for (int i = 1; i + 1 < n; ++i) {
        const double h = 40.0 / n;
        const double z = i * h;
        const double second =
            f.log_pdf(z + h) - 2.0 * f.log_pdf(z) + f.log_pdf(z - h);
        CHECK(second <= 1e-9);
    }
}

TEST_CASE("tail limit rules: normal decays to zero, exponential tails keep -log(alpha)") {
    const auto normal = make_family(parse_family_spec("normal"));
    const auto laplace = make_family(parse_family_spec("laplace"));
    const auto polyexp = make_family(parse_family_spec("polyexp"));
    const auto student = make_family(parse_family_spec("student:3"));
    REQUIRE(normal.tail_limit_rule);
    REQUIRE(laplace.tail_limit_rule);
    REQUIRE(polyexp.tail_limit_rule);
    CHECK_FALSE(student.tail_limit_rule);
    CHECK(normal.tail_limit_rule(0.1) == 0.0);
    CHECK(laplace.tail_limit_rule(0.05) == doctest::Approx(-std::log(0.05)).epsilon(1e-15));
    CHECK(polyexp.tail_limit_rule(0.1) == doctest::Approx(-std::log(0.1)).epsilon(1e-15));
}

TEST_CASE("student: symmetric, unimodal, declared non-logconcave") {
    const auto f = make_family(parse_family_spec("student:3"));
    CHECK_FALSE(f.is_logconcave);
    CHECK(f.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    for (double z : {0.3, 1.0, 4.0}) {
        CHECK(f.cdf(z) + f.cdf(-z) == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(f.inv_cdf(f.cdf(1.7)) == doctest::Approx(1.7).epsilon(1e-10));
    CHECK(f.log_pdf(2.0) == doctest::Approx(std::log(f.pdf(2.0))).epsilon(1e-12));
}

TEST_CASE("survival is the reflected cdf") {
    for (const auto& name : {"normal", "laplace", "polyexp", "student:3"}) {
        const auto f = make_family(parse_family_spec(name));
        for (double z : {-6.0, -1.2, 0.0, 0.8, 5.5}) {
            CHECK(f.survival(z) == doctest::Approx(f.cdf(-z)).epsilon(1e-13));
        }
    }
}
