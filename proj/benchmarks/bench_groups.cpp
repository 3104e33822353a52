#include <benchmark/benchmark.h>

#include "genrest/classfun.hpp"
#include "genrest/genericity.hpp"
#include "genrest/groups.hpp"

using namespace genrest;

static void BM_BuildGl2Q5(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(5, 1));
    for (auto _ : state) {
        auto G = build_group(Family::Gl2, F, {});
        benchmark::DoNotOptimize(G->class_count());
    }
}
BENCHMARK(BM_BuildGl2Q5)->Unit(benchmark::kMillisecond);

static void BM_BuildGsp4Q2(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(2, 1));
    for (auto _ : state) {
        auto G = build_group(Family::Gsp4, F, {});
        benchmark::DoNotOptimize(G->class_count());
    }
}
BENCHMARK(BM_BuildGsp4Q2)->Unit(benchmark::kMillisecond);

static void BM_WhittakerSumPml3(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(3, 1));
    auto G = build_group(Family::ParamodularLevi, F, {});
    std::vector<int> id_only{G->identity()};
    ClassFunction reg = induce_from_subset(*G, id_only, [](int) { return cplx(1, 0); });
    auto psis = generic_characters(*G);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(whittaker_dim(reg, psis[i % psis.size()]));
        ++i;
    }
}
BENCHMARK(BM_WhittakerSumPml3);

static void BM_InduceFromBorelGl2Q5(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(5, 1));
    auto G = build_group(Family::Gl2, F, {});
    for (auto _ : state) {
        ClassFunction ind =
            induce_from_subset(*G, G->subgroups().borel, [](int) { return cplx(1, 0); });
        benchmark::DoNotOptimize(ind.degree());
    }
}
BENCHMARK(BM_InduceFromBorelGl2Q5);
