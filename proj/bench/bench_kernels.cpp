// Serial reference against the OpenMP kernels on the three batch workloads.
#include "eqlines/kernels.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

namespace {

using namespace eqlines;

void BM_VerifySerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_odd_range_serial(3, 101));
}
void BM_VerifyParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_odd_range(3, 101, static_cast<int>(st.range(0))));
}

const SdpParams kAssembly{401, Rational(1, 13), 20, 10, 5};

void BM_AssembleSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(assemble(kAssembly));
}
void BM_AssembleParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(assemble_parallel(kAssembly, static_cast<int>(st.range(0))));
}

std::vector<CellSpec> table_cells() {
    std::vector<CellSpec> cells;
    for (int n = 401; n <= 404; ++n)
        for (int m : {13, 15, 17, 19}) cells.push_back({n, Rational(1, m)});
    return cells;
}

void BM_CellsSerial(benchmark::State& st) {
    auto cells = table_cells();
    for (auto _ : st) benchmark::DoNotOptimize(solve_cells_serial(cells, {}));
}
void BM_CellsParallel(benchmark::State& st) {
    auto cells = table_cells();
    for (auto _ : st) benchmark::DoNotOptimize(solve_cells(cells, {}, static_cast<int>(st.range(0))));
}

void thread_args(benchmark::internal::Benchmark* b) {
    for (int t = 1; t <= omp_get_max_threads(); t *= 2) b->Arg(t);
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AssembleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CellsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellsParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
