#include <benchmark/benchmark.h>

#include "gerry/dp_two_color.hpp"
#include "gerry/evaluate.hpp"
#include "gerry/oracle.hpp"
#include "gerry/reductions.hpp"
#include "gerry/star_diam.hpp"

namespace {

using namespace gerry;

void BM_TwoColorDpRandomTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(n, 2, 10, n / 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_two_color_tree(inst).answer);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoColorDpRandomTree)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_StarSolver(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_star_instance(n, 4, 6, n / 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_star(inst).answer);
}
BENCHMARK(BM_StarSolver)->RangeMultiplier(2)->Range(16, 256);

void BM_Diameter3Solver(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_diameter3_instance(n, 4, 6, n / 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_diameter3(inst).answer);
}
BENCHMARK(BM_Diameter3Solver)->RangeMultiplier(2)->Range(16, 128);

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  // No target-colored vertices: every cut is examined.
  Instance inst = random_instance(n, 2, 5, n / 2, 4);
  for (auto& c : inst.color_of) c = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_brute_force(inst).partitions_examined);
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 16, 4);

void BM_EvaluateConnectedK3(benchmark::State& state) {
  const CliquePathOutput out = clique_to_path(complete_graph(3), 3, true);
  const std::vector<Vertex> clique{0, 1, 2};
  const Partition part = clique_witness(out, complete_graph(3), clique);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_partition(out.instance, part).is_solution);
}
BENCHMARK(BM_EvaluateConnectedK3);

}  // namespace

BENCHMARK_MAIN();
