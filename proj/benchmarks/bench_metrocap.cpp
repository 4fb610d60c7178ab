#include "metrocap/capacity.hpp"
#include "metrocap/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace metrocap;

static void BM_SuCapacity(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const int t = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(su_capacity(n, t));
    }
}
BENCHMARK(BM_SuCapacity)->Args({100, 2})->Args({1000, 2})->Args({100, 3})->Args({300, 3})->Args({60, 4});

static void BM_EnumeratePartitions(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const int t = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_partitions(n, t));
    }
}
BENCHMARK(BM_EnumeratePartitions)->Args({200, 3})->Args({80, 5});

static void BM_DecomposeCapacity(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(capacity(decompose(Model::SpecialUnitary, n, 3, ReferenceDim::of(2))));
    }
}
BENCHMARK(BM_DecomposeCapacity)->Arg(30)->Arg(120);

static void BM_MpTwirl(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto rho = oracle::DensityOperator::from_pure(oracle::bs4_state(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::mp_twirl(rho, n, 2));
    }
}
BENCHMARK(BM_MpTwirl)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Su2Twirl(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto rho = oracle::DensityOperator::from_pure(oracle::bn1_state_su2(n));
    const oracle::Su2SchurBasis basis(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::su2_twirl(rho, basis));
    }
}
BENCHMARK(BM_Su2Twirl)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Srm(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto cb = oracle::Codebook::from_lattice(mp_lattice(n, 2));
    const auto psi = oracle::bs4_state(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::srm_discrimination(cb, psi, n, 2));
    }
}
BENCHMARK(BM_Srm)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
