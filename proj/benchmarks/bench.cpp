#include <benchmark/benchmark.h>

#include "grs/commands.hpp"
#include "grs/families.hpp"
#include "grs/invariants.hpp"
#include "grs/verify.hpp"

namespace {

const grs::SurfaceSpec& wavy_surface() {
    static const grs::SurfaceSpec spec = grs::fixed_test_surfaces()[1].spec;
    return spec;
}

void BM_InvariantSample(benchmark::State& state) {
    const grs::SurfaceSpec& s = wavy_surface();
    double u = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(grs::invariant_sample(s, u));
        u += 1e-4;
        if (u > 2.0) u = -2.0;
    }
}
BENCHMARK(BM_InvariantSample);

void BM_ExprEval(benchmark::State& state) {
    const grs::Expr e = grs::Expr::parse("2+0.3*sin(u)*sqrt(u^2+1)/cosh(u)");
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(e.eval_at(u));
        u += 1e-4;
    }
}
BENCHMARK(BM_ExprEval);

void BM_Rk4FlatNormal(benchmark::State& state) {
    const grs::IvpConfig cfg{1.0, 0.5, 0.0, 2.0, 1.0 / static_cast<double>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grs::integrate_special(grs::SpecialClass::flat_normal(),
                                                        grs::SurfaceType::TypeI, 1.0, 1.0, cfg));
    }
}
BENCHMARK(BM_Rk4FlatNormal)->Arg(1000)->Arg(10000);

void BM_GaussCurvatureClosedVsOracle(benchmark::State& state) {
    const grs::SurfaceSpec& s = wavy_surface();
    double u = -2.0;
    const bool oracle = state.range(0) != 0;
    for (auto _ : state) {
        if (oracle)
            benchmark::DoNotOptimize(grs::gauss_curvature_gauss_equation(s, u, 0.3));
        else
            benchmark::DoNotOptimize(grs::gauss_curvature(s, u));
        u += 1e-4;
        if (u > 2.0) u = -2.0;
    }
}
BENCHMARK(BM_GaussCurvatureClosedVsOracle)->Arg(0)->Arg(1);

} // namespace

BENCHMARK_MAIN();
