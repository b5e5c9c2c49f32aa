#include <benchmark/benchmark.h>

#include "dodson/fractional_operators.hpp"
#include "dodson/oracle.hpp"
#include "dodson/solutions.hpp"
#include "dodson/special_functions.hpp"

using namespace dodson;

static void BM_MittagLeffler(benchmark::State& s) {
    const OperatorOrder nu(0.7);
    const double z = -static_cast<double>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(mittag_leffler(nu, z));
}
// 1 series, 20 integral representation, 80 asymptotic
BENCHMARK(BM_MittagLeffler)->Arg(1)->Arg(20)->Arg(80);

static void BM_MWright(benchmark::State& s) {
    const WrightIndex a(0.35);
    const double z = static_cast<double>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(m_wright(a, z));
}
BENCHMARK(BM_MWright)->Arg(1)->Arg(6);

static void BM_Airy(benchmark::State& s) {
    double z = -3.0;
    for (auto _ : s) {
        benchmark::DoNotOptimize(airy_ai(z));
        z = z > 5.0 ? -3.0 : z + 0.01;
    }
}
BENCHMARK(BM_Airy);

static void BM_WarpedCaputo(benchmark::State& s) {
    const OperatorOrder nu(0.5);
    const DodsonClock c(1.0, 1.0);
    const auto g = eigenfunction(nu, -1.0, c);
    QuadratureConfig q;
    q.nodes = static_cast<std::size_t>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(warped_caputo(g, nu, c, 1.0, q));
}
BENCHMARK(BM_WarpedCaputo)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

static void BM_Spectral(benchmark::State& s) {
    const GridSpec g{-20, 20, static_cast<std::size_t>(s.range(0)), {1.0}};
    for (auto _ : s) benchmark::DoNotOptimize(spectral_fundamental(OperatorOrder(0.7), DodsonClock(), g, 1.0));
}
BENCHMARK(BM_Spectral)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_Heat(benchmark::State& s) {
    const DodsonClock c(1.0, 1.0);
    const GridSpec g{-10, 10, 801, {1.0}};
    const auto init = gaussian_profile(c, g.points(), 0.1);
    for (auto _ : s) benchmark::DoNotOptimize(heat_fd_solve(c, g, 0.1, 1.0, init, 500));
}
BENCHMARK(BM_Heat)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
