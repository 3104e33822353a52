#include <benchmark/benchmark.h>

#include "genrest/tables.hpp"

using namespace genrest;

static void BM_Gl2TableClosedQ5(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(5, 1));
    auto G = build_group(Family::Gl2, F, {});
    for (auto _ : state) {
        IrreducibleTable t = gl2_table(*G);
        benchmark::DoNotOptimize(t.row_count());
    }
}
BENCHMARK(BM_Gl2TableClosedQ5)->Unit(benchmark::kMillisecond);

static void BM_DixonGl2Q5(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(5, 1));
    auto G = build_group(Family::Gl2, F, {});
    for (auto _ : state) {
        IrreducibleTable t = dixon_table(*G);
        benchmark::DoNotOptimize(t.row_count());
    }
}
BENCHMARK(BM_DixonGl2Q5)->Unit(benchmark::kMillisecond);

static void BM_DixonGsp4Q2(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(2, 1));
    auto G = build_group(Family::Gsp4, F, {});
    for (auto _ : state) {
        IrreducibleTable t = dixon_table(*G);
        benchmark::DoNotOptimize(t.row_count());
    }
}
BENCHMARK(BM_DixonGsp4Q2)->Unit(benchmark::kMillisecond);
