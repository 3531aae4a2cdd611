#include <benchmark/benchmark.h>

#include <vector>

#include "sphframe/bandlimited.hpp"
#include "sphframe/frame.hpp"
#include "sphframe/parallel.hpp"
#include "sphframe/zonal.hpp"

using namespace sphframe;

namespace {

void BM_eval_Pk(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    double t = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_Pk(3, k, t));
        t += 1e-6;
        if (t > 1.0) t = -1.0;
    }
}
BENCHMARK(BM_eval_Pk)->Arg(16)->Arg(64)->Arg(256);

void BM_kernel_series(benchmark::State& state) {
    const int j = static_cast<int>(state.range(0));
    const KernelSeries G = band_kernel(3, j);
    double t = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_kernel_series(G, t));
        t += 1e-6;
        if (t > 1.0) t = -1.0;
    }
}
BENCHMARK(BM_kernel_series)->Arg(4)->Arg(6)->Arg(8);

void BM_product_rule(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_product_rule(3, N));
}
BENCHMARK(BM_product_rule)->Arg(64)->Arg(256)->Arg(1024);

void BM_zonal_ring_vs_direct(benchmark::State& state) {
    const bool ring = state.range(0) != 0;
    const KernelSeries K = band_kernel(3, 5);
    const auto src = product_rule_cached(96);
    std::vector<double> alpha(src->size(), 1e-3);
    const auto targets = random_unit_vectors(64, 5);
    std::vector<double> out(targets.size());
    for (auto _ : state) {
        if (ring)
            zonal_sum_ring(K, *src, alpha, targets, out);
        else
            zonal_sum_direct(K, src->nodes, alpha, targets, out);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_zonal_ring_vs_direct)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_analyze(benchmark::State& state) {
    const int jmax = static_cast<int>(state.range(0));
    const auto F = FrameSystem::build(3, jmax);
    const auto f = random_polynomial(16, 3);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(F, f));
}
BENCHMARK(BM_analyze)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_synthesize_100pts(benchmark::State& state) {
    const int jmax = static_cast<int>(state.range(0));
    const auto F = FrameSystem::build(3, jmax);
    const auto f = random_polynomial(16, 3);
    const auto tree = analyze(F, f);
    const auto pts = random_unit_vectors(100, 9);
    for (auto _ : state) benchmark::DoNotOptimize(synthesize(F, tree, pts));
}
BENCHMARK(BM_synthesize_100pts)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
