// Serial reference kernel against the OpenMP kernel on the edge sweeps.

#include "bmq/compare.hpp"
#include "bmq/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

const std::vector<bmq::BmEdge>& edges(int k) {
    static std::vector<std::vector<bmq::BmEdge>> cache(8);
    if (cache[static_cast<std::size_t>(k)].empty())
        cache[static_cast<std::size_t>(k)] = bmq::edge_instances(k, k);
    return cache[static_cast<std::size_t>(k)];
}

auto constancy = [](const bmq::BmEdge& e) { return bmq::verify_constancy(e); };
auto naturality = [](const bmq::BmEdge& e) { return bmq::verify_naturality(bmq::BmChain::from_edge(e)); };

void BM_ConstancySerial(benchmark::State& state) {
    std::span<const bmq::BmEdge> view(edges(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(bmq::run_serial(view, constancy));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(view.size()));
}

void BM_ConstancyParallel(benchmark::State& state) {
    std::span<const bmq::BmEdge> view(edges(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(bmq::run_parallel(view, constancy));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(view.size()));
}

void BM_NaturalitySerial(benchmark::State& state) {
    std::span<const bmq::BmEdge> view(edges(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(bmq::run_serial(view, naturality));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(view.size()));
}

void BM_NaturalityParallel(benchmark::State& state) {
    std::span<const bmq::BmEdge> view(edges(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(bmq::run_parallel(view, naturality));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(view.size()));
}

} // namespace

BENCHMARK(BM_ConstancySerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstancyParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NaturalitySerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaturalityParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
