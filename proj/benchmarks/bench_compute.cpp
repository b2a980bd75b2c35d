#include <benchmark/benchmark.h>

#include "safenum/construct.hpp"
#include "safenum/product.hpp"
#include "safenum/safe_number.hpp"
#include "safenum/safety.hpp"

namespace {

void BM_BlockMinimum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(safenum::block_minimum(n, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BlockMinimum)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_TableSweep(benchmark::State& state) {
    const int max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long total = 0;
        for (int m = 1; m <= max; ++m)
            for (int n = m; n <= max; ++n) total += safenum::safe_number(m, n);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_TableSweep)->Arg(16)->Arg(32)->Arg(64);

void BM_ConstructMin(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(safenum::construct_min(n, n));
    }
}
BENCHMARK(BM_ConstructMin)->Arg(8)->Arg(16)->Arg(32);

void BM_VerifySafeSet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const safenum::ProductGraph p(n, n);
    const safenum::Construction c = safenum::construct_min(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(safenum::verify_safe_set(p.graph(), c.set));
    }
}
BENCHMARK(BM_VerifySafeSet)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
