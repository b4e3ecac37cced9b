#include <benchmark/benchmark.h>

#include "hpdcover/coverage.hpp"
#include "hpdcover/families.hpp"
#include "hpdcover/rng.hpp"

using namespace hpdcover;

namespace {

const LocationFamily& normal() {
    static const LocationFamily f = make_family(parse_family_spec("normal"));
    return f;
}

const LocationFamily& laplace() {
    static const LocationFamily f = make_family(parse_family_spec("laplace"));
    return f;
}

const LocationFamily& polyexp() {
    static const LocationFamily f = make_family(parse_family_spec("polyexp"));
    return f;
}

const LocationFamily& pick(int idx) {
    switch (idx) {
        case 1: return laplace();
        case 2: return polyexp();
        default: return normal();
    }
}

}  // namespace

static void BM_Quantile(benchmark::State& state) {
    const auto& f = pick(static_cast<int>(state.range(0)));
    double p = 0.12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.inv_cdf(p));
        p += 1e-7;
    }
}
BENCHMARK(BM_Quantile)->Arg(0)->Arg(1)->Arg(2);

static void BM_QuantileNumericFallback(benchmark::State& state) {
    const auto& f = pick(static_cast<int>(state.range(0)));
    double p = 0.12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv_cdf_numeric(f, p));
        p += 1e-7;
    }
}
BENCHMARK(BM_QuantileNumericFallback)->Arg(0)->Arg(1)->Arg(2);

static void BM_CredibleIntervalLowTail(benchmark::State& state) {
    const auto& f = pick(static_cast<int>(state.range(0)));
    const Alpha alpha(0.1);
    double x = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(credible_interval(f, alpha, x));
        x = x < -2.0 ? x + 1e-6 : -6.0;
    }
}
BENCHMARK(BM_CredibleIntervalLowTail)->Arg(0)->Arg(1)->Arg(2);

static void BM_CredibleIntervalTwoSided(benchmark::State& state) {
    const auto& f = pick(static_cast<int>(state.range(0)));
    const Alpha alpha(0.1);
    double x = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(credible_interval(f, alpha, x));
        x = x < 7.0 ? x + 1e-6 : 3.0;
    }
}
BENCHMARK(BM_CredibleIntervalTwoSided)->Arg(0)->Arg(1)->Arg(2);

static void BM_CoverageExact(benchmark::State& state) {
    const auto& f = pick(static_cast<int>(state.range(0)));
    const Alpha alpha(0.1);
    const FamilyConstants c = family_constants(f, alpha);
    double theta = c.tail_limit + 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coverage_exact(f, alpha, c, theta));
        theta = theta < c.two_d0 ? theta + 1e-6 : c.tail_limit + 0.1;
    }
}
BENCHMARK(BM_CoverageExact)->Arg(0)->Arg(1)->Arg(2);

static void BM_CoverageCurve400(benchmark::State& state) {
    const auto& f = pick(static_cast<int>(state.range(0)));
    const Alpha alpha(0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coverage_curve(f, alpha, 12.0, 400));
    }
}
BENCHMARK(BM_CoverageCurve400)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_McDraw(benchmark::State& state) {
    const auto& f = pick(static_cast<int>(state.range(0)));
    const Alpha alpha(0.1);
    const CounterRng rng(42);
    const double theta = 2.0;
    std::uint64_t i = 0;
    for (auto _ : state) {
        const double x = theta + f.inv_cdf(rng.uniform(i++));
        benchmark::DoNotOptimize(interval_contains(f, alpha, x, theta));
    }
}
BENCHMARK(BM_McDraw)->Arg(0)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
