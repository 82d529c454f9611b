#include <benchmark/benchmark.h>

#include "zenoswitch/fabry_perot.hpp"
#include "zenoswitch/special_functions.hpp"
#include "zenoswitch/switch_metrics.hpp"
#include "zenoswitch/traveling_wave.hpp"

using namespace zeno;

static void BM_PropagateFullPm(benchmark::State& st) {
    FieldState in;
    in.a_s = 1;
    const WaveguideParams p{1, 0, 0, 0, 5};
    for (auto _ : st) benchmark::DoNotOptimize(propagate_full(in, p));
}
BENCHMARK(BM_PropagateFullPm)->Unit(benchmark::kMillisecond);

static void BM_PropagateFullPumped(benchmark::State& st) {
    FieldState in;
    in.a_s = 1;
    in.a_p = 10;
    const WaveguideParams p{1, static_cast<double>(st.range(0)), 0.01, 0, 5};
    for (auto _ : st) benchmark::DoNotOptimize(propagate_full_final(in, p));
}
BENCHMARK(BM_PropagateFullPumped)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_JacobiSn(benchmark::State& st) {
    double u = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(jacobi_sn(u, 0.9));
        u += 1e-3;
    }
}
BENCHMARK(BM_JacobiSn);

static void BM_SteadyState(benchmark::State& st) {
    CavityParams c;
    c.gamma = static_cast<double>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(steady_state(c));
}
BENCHMARK(BM_SteadyState)->Arg(0)->Arg(5)->Unit(benchmark::kMillisecond);

// One z-propagation per time slice; this is the inner cost of a pulse run.
static void BM_PulseSlice(benchmark::State& st) {
    FieldState in;
    in.a_s = 1;
    const WaveguideParams p{1, 1, 0.01, 0, 3};
    for (auto _ : st) benchmark::DoNotOptimize(propagate_undepleted_final(in, p, 10));
}
BENCHMARK(BM_PulseSlice)->Unit(benchmark::kMicrosecond);

static void BM_PulseThroughWaveguide(benchmark::State& st) {
    const SuperGaussianPulse pulse{1, 0.2, 1};
    const WaveguideParams p{1, 10, 0.01, 0, 3};
    for (auto _ : st) benchmark::DoNotOptimize(pulse_through_waveguide(pulse, p, pulse));
}
BENCHMARK(BM_PulseThroughWaveguide)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
