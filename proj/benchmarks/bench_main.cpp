#include <benchmark/benchmark.h>

#include "qjl/dmvv.hpp"
#include "qjl/genus.hpp"
#include "qjl/quasi_jacobi.hpp"
#include "qjl/theta.hpp"
#include "qjl/variety.hpp"

using namespace qjl;

static void BM_ThetaSquare(benchmark::State &state)
{
    QYSeries t = theta(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(t * t);
    }
}
BENCHMARK(BM_ThetaSquare)->Arg(10)->Arg(20)->Arg(40);

static void BM_Ebar(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(ebar(static_cast<int>(state.range(0)), 20));
    }
}
BENCHMARK(BM_Ebar)->DenseRange(1, 4);

static void BM_RecognizeSurface(benchmark::State &state)
{
    VarietyModel s = model_hypersurface(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(recognize(normalized_elliptic_genus(s, 12), 2));
    }
}
BENCHMARK(BM_RecognizeSurface)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_EllipticGenusProjective(benchmark::State &state)
{
    VarietyModel p = model_projective(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(elliptic_genus(p, 12));
    }
}
BENCHMARK(BM_EllipticGenusProjective)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_SymmetricProductK3(benchmark::State &state)
{
    DmvvTable k3 = extract_cml(elliptic_genus(model_hypersurface(3, 4), 17));
    for (auto _ : state) {
        benchmark::DoNotOptimize(borcherds_product(k3, state.range(0), 4, 4));
    }
}
BENCHMARK(BM_SymmetricProductK3)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
