#include <benchmark/benchmark.h>

#include "genrest/field.hpp"
#include "genrest/matq.hpp"

using namespace genrest;

static void BM_FieldMul(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(3, 2));
    int acc = 1;
    for (auto _ : state) {
        acc = F.mul(acc, 5);
        acc = F.add(acc, 7);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMul);

static void BM_FieldBuild(benchmark::State& state) {
    for (auto _ : state) {
        FieldTable F = field_build(FieldSpec::make(2, static_cast<int>(state.range(0))));
        benchmark::DoNotOptimize(F.generator());
    }
}
BENCHMARK(BM_FieldBuild)->Arg(4)->Arg(8);

static void BM_Mat4MulPack(benchmark::State& state) {
    FieldTable F = field_build(FieldSpec::make(3, 1));
    MatQ a = MatQ::identity(4);
    a.set(0, 1, 1);
    a.set(1, 2, 2);
    MatQ b = MatQ::identity(4);
    b.set(2, 3, 1);
    b.set(0, 3, 2);
    for (auto _ : state) {
        MatQ c = mat_mul(F, a, b);
        benchmark::DoNotOptimize(mat_pack(c, F.q()));
        std::swap(a, b);
    }
}
BENCHMARK(BM_Mat4MulPack);
