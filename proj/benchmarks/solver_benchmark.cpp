#include <benchmark/benchmark.h>

#include "mcran/conflict_graph.hpp"
#include "mcran/mwis_solver.hpp"
#include "mcran/network_model.hpp"
#include "mcran/oracle.hpp"

namespace {

using namespace mcran;

UtilityTensor desk_tensor(std::size_t pz, std::size_t users) {
    NetworkConfig config;
    config.dims = {2, 2, pz, users};
    config.rng_seed = 17;
    return utility_tensor(generate_instance(config));
}

void BM_BuildGraph(benchmark::State& state) {
    NetworkConfig config;
    config.dims = {3, 3, 5, static_cast<std::size_t>(state.range(0))};
    const auto tensor = utility_tensor(generate_instance(config));
    for (auto _ : state) benchmark::DoNotOptimize(build_graph(CoordinationMode::Hybrid, tensor, config.dims));
}
BENCHMARK(BM_BuildGraph)->Arg(12)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SolveExact(benchmark::State& state) {
    const auto mode = static_cast<CoordinationMode>(state.range(0));
    const auto pz = static_cast<std::size_t>(state.range(1));
    const auto tensor = desk_tensor(pz, 8);
    const auto graph = build_graph(mode, tensor, tensor.dims);
    for (auto _ : state) benchmark::DoNotOptimize(solve_exact(graph));
    state.SetLabel(std::string(to_string(mode)));
}
BENCHMARK(BM_SolveExact)->ArgsProduct({{0, 1, 2}, {1, 2, 3}})->Unit(benchmark::kMicrosecond);

void BM_SolveGreedy(benchmark::State& state) {
    NetworkConfig config;
    config.dims = {3, 3, 5, static_cast<std::size_t>(state.range(0))};
    const auto tensor = utility_tensor(generate_instance(config));
    const auto graph = build_graph(CoordinationMode::Hybrid, tensor, config.dims);
    for (auto _ : state) benchmark::DoNotOptimize(solve_greedy(graph, 2));
}
BENCHMARK(BM_SolveGreedy)->Arg(12)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_OracleTwoByTwo(benchmark::State& state) {
    const auto tensor = desk_tensor(2, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::brute_force({CoordinationMode::SignalLevel, tensor.dims}, tensor));
}
BENCHMARK(BM_OracleTwoByTwo)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
