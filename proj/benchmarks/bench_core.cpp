#include <benchmark/benchmark.h>

#include "hypertrees/chains.hpp"
#include "hypertrees/enumerate.hpp"
#include "hypertrees/homology.hpp"
#include "hypertrees/kpolynomial.hpp"

using namespace hypertrees;

static void BM_Enumerate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto trees = enumerate_hypertrees(n);
        benchmark::DoNotOptimize(trees);
    }
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Arg(6);

static void BM_PosetBuild(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HypertreePoset p = HypertreePoset::build(n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PosetBuild)->Arg(4)->Arg(5);

static void BM_WeightedChainCount(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PosetCache cache;
    cache.poset(n, 1);  // build outside the loop
    Perm id = identity_perm(n);
    for (auto _ : state) {
        WeightedCount c = count_large_chains({n, 5, ChainVariant::Plain, true}, id, cache);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_WeightedChainCount)->Arg(4)->Arg(5);

static void BM_CharacterPolynomial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PosetCache cache;
    cache.poset(n, 1);
    for (auto _ : state) {
        KPolynomial kp = character_polynomial(n, ChainVariant::Plain, true, cache);
        benchmark::DoNotOptimize(kp);
    }
}
BENCHMARK(BM_CharacterPolynomial)->Arg(4)->Arg(5);

static void BM_HomologyRanks(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PosetCache cache;
    cache.poset(n, 1);
    for (auto _ : state) {
        auto dims = homology_dimensions(build_chain_complex(n, cache));
        benchmark::DoNotOptimize(dims);
    }
}
BENCHMARK(BM_HomologyRanks)->Arg(4)->Arg(5);

static void BM_PreLieSeries(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CycleIndex z = named_series(SeriesTag::PreLie, degree);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_PreLieSeries)->Arg(5)->Arg(7);

static void BM_Plethysm(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    CycleIndex comm = named_series(SeriesTag::Comm, degree);
    CycleIndex prelie = named_series(SeriesTag::PreLie, degree);
    for (auto _ : state) {
        CycleIndex z = plethysm(comm, prelie);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_Plethysm)->Arg(5)->Arg(7);

static void BM_HalClosedForm(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CycleIndex z = hal_series(SeriesTag::HAL, degree, HalMethod::ClosedForm);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_HalClosedForm)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
