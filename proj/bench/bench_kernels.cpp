// Parallel kernels against their serial references.

#include "nnfif/fif.hpp"
#include "nnfif/kernels.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace nnfif;

namespace {

FifProblem problem() {
    return FifProblem{.variant = FifVariant::AlphaFractal,
                      .partition = Partition::uniform(0.0, std::numbers::pi, 4),
                      .scaling = ScalingVector::constant({0.3, 0.3, 0.3, 0.3}),
                      .operator_cfg = OperatorConfig{SigmoidalKernel::ramp(), 0.0, std::numbers::pi, 32, 0},
                      .f = FunctionInput::analytic([](double x) { return std::sin(x); })};
}

void BM_SweepParallel(benchmark::State& state) {
    const RbOperator op(problem(), static_cast<std::size_t>(state.range(0)));
    const auto phi = op.initial_guess();
    for (auto _ : state) benchmark::DoNotOptimize(op.apply(phi));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) {
    const RbOperator op(problem(), static_cast<std::size_t>(state.range(0)));
    const auto phi = op.initial_guess();
    for (auto _ : state) benchmark::DoNotOptimize(op.apply_serial(phi));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<double> noise(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

void BM_HolderParallel(benchmark::State& state) {
    const auto v = noise(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::holder_pairs_parallel(v, 1e-3, 0.5));
}

void BM_HolderSerial(benchmark::State& state) {
    const auto v = noise(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::holder_pairs_serial(v, 1e-3, 0.5));
}

const std::vector<std::uint64_t> kSubdivisions = {16, 32, 64, 128, 256, 512, 1024, 2048, 4096};

void graph_inputs(std::size_t n, std::vector<double>& x, std::vector<double>& y) {
    y = noise(n);
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i) / static_cast<double>(n - 1);
}

void BM_GraphBoxesParallel(benchmark::State& state) {
    std::vector<double> x, y;
    graph_inputs(static_cast<std::size_t>(state.range(0)), x, y);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::graph_box_counts_parallel(x, y, kSubdivisions));
}

void BM_GraphBoxesSerial(benchmark::State& state) {
    std::vector<double> x, y;
    graph_inputs(static_cast<std::size_t>(state.range(0)), x, y);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::graph_box_counts_serial(x, y, kSubdivisions));
}

void BM_CloudBoxesParallel(benchmark::State& state) {
    std::vector<double> x, y;
    graph_inputs(static_cast<std::size_t>(state.range(0)), x, y);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cloud_box_counts_parallel(x, y, kSubdivisions));
}

void BM_CloudBoxesSerial(benchmark::State& state) {
    std::vector<double> x, y;
    graph_inputs(static_cast<std::size_t>(state.range(0)), x, y);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::cloud_box_counts_serial(x, y, kSubdivisions));
}

} // namespace

BENCHMARK(BM_SweepParallel)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->UseRealTime();
BENCHMARK(BM_SweepSerial)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->UseRealTime();
BENCHMARK(BM_HolderParallel)->Arg(1000)->Arg(4000)->UseRealTime();
BENCHMARK(BM_HolderSerial)->Arg(1000)->Arg(4000)->UseRealTime();
BENCHMARK(BM_GraphBoxesParallel)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_GraphBoxesSerial)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_CloudBoxesParallel)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_CloudBoxesSerial)->Arg(1 << 18)->UseRealTime();

BENCHMARK_MAIN();
