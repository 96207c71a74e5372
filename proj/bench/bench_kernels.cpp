// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "powercolor/coloring.hpp"
#include "powercolor/cograph.hpp"
#include "powercolor/generate.hpp"
#include "powercolor/graph.hpp"

using namespace powercolor;

namespace {

Graph count_input() { return power(cycle_graph(5), 2).product(); }

// A large cograph: the P4 scan has to visit every 4-subset.
Graph p4_input() {
  const std::size_t parts[] = {12, 12, 12, 12, 12};
  return complete_multipartite(parts);
}

void BM_CountColorings(benchmark::State& state) {
  const auto g = count_input();
  for (auto _ : state) benchmark::DoNotOptimize(count_colorings(g, 3).count);
}

void BM_CountColoringsSerial(benchmark::State& state) {
  const auto g = count_input();
  for (auto _ : state) benchmark::DoNotOptimize(serial::count_colorings(g, 3).count);
}

void BM_P4Scan(benchmark::State& state) {
  const auto g = p4_input();
  for (auto _ : state) benchmark::DoNotOptimize(is_cograph_p4(g).cograph);
}

void BM_P4ScanSerial(benchmark::State& state) {
  const auto g = p4_input();
  for (auto _ : state) benchmark::DoNotOptimize(serial::is_cograph_p4(g).cograph);
}

void BM_TensorProduct(benchmark::State& state) {
  const Graph f[] = {complete_graph(6), complete_graph(6), cycle_graph(7), cycle_graph(7)};
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product(f).product().size());
}

void BM_TensorProductSerial(benchmark::State& state) {
  const Graph f[] = {complete_graph(6), complete_graph(6), cycle_graph(7), cycle_graph(7)};
  for (auto _ : state) benchmark::DoNotOptimize(serial::tensor_product(f).product().size());
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nonisomorphic_graphs(state.range(0)).size());
}

void BM_GenerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::nonisomorphic_graphs(state.range(0)).size());
}

}  // namespace

BENCHMARK(BM_CountColorings)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountColoringsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_P4Scan)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_P4ScanSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TensorProduct)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TensorProductSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Generate)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GenerateSerial)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
