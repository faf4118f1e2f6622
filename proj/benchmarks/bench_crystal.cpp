#include <benchmark/benchmark.h>

#include "spincrystal/blocks.hpp"
#include "spincrystal/crystal.hpp"
#include "spincrystal/graph.hpp"
#include "spincrystal/partitions.hpp"

using namespace spincrystal;

static void BM_GraphGenerate(benchmark::State& state) {
    auto ct = CartanType::finite(static_cast<int>(state.range(0)));
    int max_n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        CrystalGraph g(ct, max_n);
        benchmark::DoNotOptimize(g.edges().size());
    }
}
BENCHMARK(BM_GraphGenerate)->Args({1, 14})->Args({2, 14})->Args({3, 14});

static void BM_Enumerate(benchmark::State& state) {
    auto ct = CartanType::finite(1);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = enumerate_h_strict(n, ct);
        benchmark::DoNotOptimize(v.size());
    }
}
BENCHMARK(BM_Enumerate)->Arg(16)->Arg(24)->Arg(32);

static void BM_BarCores(benchmark::State& state) {
    auto ct = CartanType::finite(1);
    auto layer = enumerate_h_strict(static_cast<int>(state.range(0)), ct);
    for (auto _ : state)
        for (const auto& lam : layer)
            benchmark::DoNotOptimize(bar_core(lam, ct).size());
}
BENCHMARK(BM_BarCores)->Arg(16)->Arg(24);

static void BM_Signature(benchmark::State& state) {
    auto ct = CartanType::finite(2);
    Partition lam{16, 11, 10, 10, 9, 5, 1};
    for (auto _ : state)
        for (Residue i = 0; i <= 2; ++i)
            benchmark::DoNotOptimize(eps(lam, ct, i));
}
BENCHMARK(BM_Signature);

BENCHMARK_MAIN();
