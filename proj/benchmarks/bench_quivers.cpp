#include <benchmark/benchmark.h>

#include "mckay/chartab.hpp"
#include "mckay/covering.hpp"
#include "mckay/diagrams.hpp"
#include "mckay/emit.hpp"

using namespace mckay;

static void BM_CycloMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CycloInt a = CycloInt::root_power(n, 1) + CycloInt::root_power(n, n - 1).scaled(3);
    const CycloInt b = CycloInt::root_power(n, 2).scaled(-2) + CycloInt::one(n);
    for (auto _ : state) {
        CycloInt c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CycloMul)->Arg(5)->Arg(12)->Arg(16)->Arg(24);

static void BM_HexagramQuiver(benchmark::State& state) {
    for (auto _ : state) {
        Quiver q = preset_quiver("hexagrams");
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_HexagramQuiver);

static void BM_TableQuiverQ8(benchmark::State& state) {
    const CharacterTable t = builtin_q8_table();
    for (auto _ : state) {
        Quiver q = mckay_quiver_table(t, RepSpec{{4}});
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_TableQuiverQ8);

static void BM_TableQuiverC12(benchmark::State& state) {
    const CharacterTable t = builtin_cyclic_table(12);
    for (auto _ : state) {
        Quiver q = mckay_quiver_table(t, RepSpec{{1, 11}});
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_TableQuiverC12);

static void BM_CoveringChain(benchmark::State& state) {
    for (auto _ : state) {
        auto reports = covering_chain_hexagrams();
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(BM_CoveringChain);

static void BM_EmitDotHexagrams(benchmark::State& state) {
    const Quiver q = preset_quiver("hexagrams");
    for (auto _ : state) {
        std::string dot = emit_dot(q);
        benchmark::DoNotOptimize(dot);
    }
}
BENCHMARK(BM_EmitDotHexagrams);

static void BM_EmitJsonHexagrams(benchmark::State& state) {
    const Quiver q = preset_quiver("hexagrams");
    for (auto _ : state) {
        std::string text = emit_json(q);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(BM_EmitJsonHexagrams);

BENCHMARK_MAIN();
