// Serial reference vs OpenMP paths of the parallel kernels.
// CAMERON_WORKERS sets the thread count.

#include <benchmark/benchmark.h>

#include "cameron/combinatorics.hpp"
#include "cameron/determinant.hpp"
#include "cameron/operator.hpp"
#include "cameron/verify.hpp"

using namespace cameron;

namespace {

Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

CoefficientSequence dense_transform(std::size_t n) {
    return restricted_transform(CoefficientSequence::seed({3, -2, 5, 1, -4}), n);
}

void BM_InversionWalk(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto z = dense_transform(n);
    for (auto _ : state) benchmark::DoNotOptimize(inversion_column(z, n, exec_of(state)));
}
BENCHMARK(BM_InversionWalk)->ArgsProduct({{0, 1}, {18, 22}})->Unit(benchmark::kMillisecond);

void BM_AssociatedCompositions(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const CoefficientSequence x(2, std::vector<Rational>(n, Rational(3, 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(composition_column(x, OperatorMode::associated(2), n, exec_of(state)));
    }
}
BENCHMARK(BM_AssociatedCompositions)->ArgsProduct({{0, 1}, {30, 40}})->Unit(benchmark::kMillisecond);

void BM_DeterminantColumn(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto x = CoefficientSequence::seed({1, -1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(restricted_z_det_column(x, 3, n, exec_of(state)));
}
BENCHMARK(BM_DeterminantColumn)->ArgsProduct({{0, 1}, {100, 200}})->Unit(benchmark::kMillisecond);

void BM_VerifyOperators(benchmark::State& state) {
    VerifyOptions opts;
    opts.scope = VerifyScope::operators;
    opts.seed_count = 10;
    opts.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(run_verify(opts).passed());
}
BENCHMARK(BM_VerifyOperators)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    configure_workers_from_env();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
