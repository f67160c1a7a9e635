#include <benchmark/benchmark.h>

#include "mellin/contour.hpp"
#include "mellin/specfun.hpp"

using namespace mellin;

namespace {

// Γ(s)ζ(s) on Re s = 2, the kernel behind the Bose sums.
ContourSpec kernel() {
    ContourSpec spec;
    spec.c = Real(2);
    spec.integrand = [](const Complex& s) { return gamma(s) * zeta(s); };
    spec.decay = DecayModel::gamma_like(2.0, 0.5);
    return spec;
}

void BM_vertical_parallel(benchmark::State& state) {
    auto ctx = PrecisionContext::for_target(static_cast<int>(state.range(0)));
    ContourSpec spec = kernel();
    for (auto _ : state) benchmark::DoNotOptimize(integrate_vertical(spec, ctx).panels);
}

void BM_vertical_serial(benchmark::State& state) {
    auto ctx = PrecisionContext::for_target(static_cast<int>(state.range(0)));
    ContourSpec spec = kernel();
    for (auto _ : state) benchmark::DoNotOptimize(integrate_vertical_serial(spec, ctx).panels);
}

}  // namespace

BENCHMARK(BM_vertical_parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_vertical_serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
