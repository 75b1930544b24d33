#include <benchmark/benchmark.h>

#include "torsionlab/catalog.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

OperatorField bench_op(int n, std::uint64_t seed) {
    FamilySpec spec;
    spec.dim = n;
    spec.degree = 1;
    spec.seed = seed;
    return make_random(spec, default_chart(n));
}

void BM_Nijenhuis(benchmark::State& state) {
    OperatorField a = bench_op(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nijenhuis(a));
    }
}
BENCHMARK(BM_Nijenhuis)->Arg(2)->Arg(3)->Arg(4);

void BM_GenTorsion(benchmark::State& state) {
    OperatorField a = bench_op(3, 12);
    const LevelM m(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_torsion(a, m));
    }
}
BENCHMARK(BM_GenTorsion)->Arg(1)->Arg(2)->Arg(3);

void BM_GenTorsionClosed(benchmark::State& state) {
    OperatorField a = bench_op(3, 12);
    const LevelM m(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_torsion_closed(a, m));
    }
}
BENCHMARK(BM_GenTorsionClosed)->Arg(1)->Arg(2)->Arg(3);

void BM_Polarization(benchmark::State& state) {
    auto chart = default_chart(2);
    std::vector<OperatorField> quad;
    for (std::uint64_t s = 1; s <= 4; ++s) {
        FamilySpec spec;
        spec.degree = 1;
        spec.seed = 20 + s;
        quad.push_back(make_random(spec, chart));
    }
    const auto method = static_cast<PolarizationMethod>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(polarization(LevelM(2), quad, method));
    }
}
BENCHMARK(BM_Polarization)
    ->Arg(static_cast<int>(PolarizationMethod::subset_sum))
    ->Arg(static_cast<int>(PolarizationMethod::lambda_extraction))
    ->Arg(static_cast<int>(PolarizationMethod::recurrence));

void BM_Defect5(benchmark::State& state) {
    auto chart = default_chart(2);
    std::vector<OperatorField> five;
    for (std::uint64_t s = 1; s <= 5; ++s) {
        FamilySpec spec;
        spec.degree = 1;
        spec.seed = 30 + s;
        five.push_back(make_random(spec, chart));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(defect(LevelM(2), five));
    }
}
BENCHMARK(BM_Defect5);

} // namespace

BENCHMARK_MAIN();
