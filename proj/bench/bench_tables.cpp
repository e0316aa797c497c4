#include <benchmark/benchmark.h>

#include "klooster/kloosterman.hpp"

namespace {

using klooster::KloostermanTable;
using klooster::PrimeModulus;

void BM_TableSerial(benchmark::State& state) {
    const PrimeModulus p(state.range(0));
    for (auto _ : state) {
        auto t = KloostermanTable::direct_serial(p);
        benchmark::DoNotOptimize(t.values().data());
    }
    state.SetComplexityN(state.range(0));
}

void BM_TableParallel(benchmark::State& state) {
    const PrimeModulus p(state.range(0));
    for (auto _ : state) {
        auto t = KloostermanTable::direct(p);
        benchmark::DoNotOptimize(t.values().data());
    }
    state.SetComplexityN(state.range(0));
}

void BM_TableBluestein(benchmark::State& state) {
    const PrimeModulus p(state.range(0));
    for (auto _ : state) {
        auto t = KloostermanTable::bluestein(p);
        benchmark::DoNotOptimize(t.values().data());
    }
    state.SetComplexityN(state.range(0));
}

void BM_SingleSum(benchmark::State& state) {
    const PrimeModulus p(state.range(0));
    std::int64_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(klooster::kloosterman_sum(a, 1, p));
        a = a % (p.value() - 1) + 1;
    }
}

}  // namespace

BENCHMARK(BM_TableSerial)->Arg(1009)->Arg(4001)->Arg(10007)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_TableParallel)->Arg(1009)->Arg(4001)->Arg(10007)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_TableBluestein)->Arg(1009)->Arg(4001)->Arg(10007)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_SingleSum)->Arg(1009)->Arg(10007)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
