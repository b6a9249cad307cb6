#include <benchmark/benchmark.h>

#include <random>

#include "incdom/incdom.hpp"

using namespace incdom;

static void BM_Certificate(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(certificate(g));
}
BENCHMARK(BM_Certificate)->Arg(16)->Arg(32)->Arg(64);

static void BM_VerifyDominatingExample2(benchmark::State& state) {
    const DomPair d = dompair_from_wellcovered(example2_layers().hypergraph);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_dominating(d, threads));
}
BENCHMARK(BM_VerifyDominatingExample2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_VerifyIndependentExample2(benchmark::State& state) {
    const DomPair d = dompair_from_wellcovered(example2_layers().hypergraph);
    for (auto _ : state) benchmark::DoNotOptimize(verify_independent(d));
}
BENCHMARK(BM_VerifyIndependentExample2)->Unit(benchmark::kMillisecond);

static void BM_Cliques(benchmark::State& state) {
    const KGraph h = example2_layers().hypergraph;
    for (auto _ : state) benchmark::DoNotOptimize(cliques(h));
}
BENCHMARK(BM_Cliques)->Unit(benchmark::kMillisecond);

static void BM_Solve32(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve(n, 3, 2, SolveMode::Gamma));
}
BENCHMARK(BM_Solve32)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_Solve42Gamma(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve(9, 4, 2, SolveMode::Gamma));
}
BENCHMARK(BM_Solve42Gamma)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_Shadow(benchmark::State& state) {
    const SetFamily f = SetFamily::complete(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(shadow(f));
}
BENCHMARK(BM_Shadow)->Arg(16)->Arg(24);

BENCHMARK_MAIN();
