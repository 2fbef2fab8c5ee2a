#include "qgenus/filtration.hpp"
#include "qgenus/genus.hpp"
#include "qgenus/hilbert_symbol.hpp"
#include "qgenus/primes.hpp"

#include <benchmark/benchmark.h>

using namespace qgenus;

static void BM_CycIntMultiply(benchmark::State& state)
{
    const CycInt a(123456789, -987654321, 55555, 42), b(-3, 7, 11, -13);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycIntMultiply);

static void BM_Norm(benchmark::State& state)
{
    const CycInt a(123456789, -987654321, 55555, 42);
    for (auto _ : state) benchmark::DoNotOptimize(a.norm());
}
BENCHMARK(BM_Norm);

static void BM_TameSymbol(benchmark::State& state)
{
    const FPrime pi = primes_above(state.range(0)).front();
    const CycInt a(2, 1, 0, 3), b(5, -1, 4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(tame_hilbert_symbol(a, b, pi));
}
BENCHMARK(BM_TameSymbol)->Arg(11)->Arg(19)->Arg(7)->Arg(991);

static void BM_Analyze(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(analyze(state.range(0)));
}
BENCHMARK(BM_Analyze)->Arg(11)->Arg(42)->Arg(301)->Arg(1001)->Arg(2 * 11 * 31 * 41);

static void BM_RankProfile(benchmark::State& state)
{
    const auto S = build_filtration_module(5, {1, 2, 4});
    const auto engine = state.range(0) ? OracleEngine::Enumeration : OracleEngine::LinearAlgebra;
    for (auto _ : state) benchmark::DoNotOptimize(brute_rank_profile(S, engine));
}
BENCHMARK(BM_RankProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
