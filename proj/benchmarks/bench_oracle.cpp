#include <benchmark/benchmark.h>

#include "safenum/graph.hpp"
#include "safenum/oracle.hpp"
#include "safenum/product.hpp"

namespace {

void BM_OracleProduct(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const safenum::ProductGraph p(m, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(safenum::exhaustive_safe_numbers(p.graph()));
    }
}
BENCHMARK(BM_OracleProduct)->Args({2, 8})->Args({3, 4})->Args({4, 4});

void BM_OraclePath(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const safenum::Graph g = safenum::Graph::path(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(safenum::exhaustive_safe_numbers(g));
    }
}
BENCHMARK(BM_OraclePath)->DenseRange(8, 18, 5);

}  // namespace
