// Serial reference versus OpenMP kernels.
#include "affine/resolutions.hpp"

#include <benchmark/benchmark.h>

using namespace affine;

static void BM_EnumerateSerial(benchmark::State& st) {
    WeylGroup G(cartan_of_type("A2"));
    for (auto _ : st) benchmark::DoNotOptimize(G.enumerate_serial(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_EnumerateSerial)->Arg(6)->Arg(9);

static void BM_EnumerateOmp(benchmark::State& st) {
    WeylGroup G(cartan_of_type("A2"));
    for (auto _ : st) benchmark::DoNotOptimize(G.enumerate(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_EnumerateOmp)->Arg(6)->Arg(9);

static void BM_EulerSerial(benchmark::State& st) {
    WeylGroup G(cartan_of_type("A2"));
    const auto lam = parse_weight(G.cartan(), "L0");
    const int N = static_cast<int>(st.range(0));
    const auto terms = bgg_complex(G, lam, N);
    for (auto _ : st) benchmark::DoNotOptimize(euler_sum_serial(G, terms, lam, N));
}
BENCHMARK(BM_EulerSerial)->Arg(6)->Arg(8);

static void BM_EulerOmp(benchmark::State& st) {
    WeylGroup G(cartan_of_type("A2"));
    const auto lam = parse_weight(G.cartan(), "L0");
    const int N = static_cast<int>(st.range(0));
    const auto terms = bgg_complex(G, lam, N);
    for (auto _ : st) benchmark::DoNotOptimize(euler_sum(G, terms, lam, N));
}
BENCHMARK(BM_EulerOmp)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
