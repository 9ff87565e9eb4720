// Microbenchmarks for the certification, decomposition, merging, and numeric
// hot paths. Sizes are kept modest so the full suite runs in seconds.

#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "random_nets.hpp"
#include "topoctrl/topoctrl.hpp"

using namespace topoctrl;

namespace {

SignedNetwork random_net(int n) {
  std::mt19937_64 rng(42u + static_cast<unsigned>(n));
  return testrand::random_connected_net(rng, n, n, 2, 2);
}

void BM_find_dedicated_node(benchmark::State& state) {
  const Graph g = build_graph(fixtures::mesh5());
  const StateSubset alpha = StateSubset::of({1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(find_dedicated_node(g, alpha));
}
BENCHMARK(BM_find_dedicated_node);

void BM_certify_bruteforce_path(benchmark::State& state) {
  const Graph g = build_graph(fixtures::path_n(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(certify_bruteforce(g));
}
BENCHMARK(BM_certify_bruteforce_path)->Arg(8)->Arg(12)->Arg(16);

void BM_path_search(benchmark::State& state) {
  const SignedNetwork net = random_net(static_cast<int>(state.range(0)));
  const Graph g = build_graph(net);
  for (auto _ : state) benchmark::DoNotOptimize(path_search(g));
}
BENCHMARK(BM_path_search)->Arg(10)->Arg(20)->Arg(40);

void BM_merge_condition(benchmark::State& state) {
  // The second merge step of the chordal mesh: five connecting edges against
  // an accumulated three-node graph.
  const SignedNetwork net = fixtures::mesh5_chord();
  const std::vector<Path> paths = path_search(net);
  const Graph g12 =
      merge_graphs(path_subgraph(net, paths[0]), path_subgraph(net, paths[1]),
                   connecting_edges(path_subgraph(net, paths[0]),
                                    path_subgraph(net, paths[1]), net));
  const Graph g3 = path_subgraph(net, paths[2]);
  const ConnectingEdgeSet edges = connecting_edges(g12, g3, net);
  for (auto _ : state) benchmark::DoNotOptimize(merge_condition(g12, g3, edges));
}
BENCHMARK(BM_merge_condition);

void BM_pipeline(benchmark::State& state) {
  const SignedNetwork net = random_net(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(net));
}
BENCHMARK(BM_pipeline)->Arg(5)->Arg(10);

void BM_numeric_rank(benchmark::State& state) {
  const SignedNetwork net = random_net(static_cast<int>(state.range(0)));
  const Realization r =
      sample_realization(net, SampleMode::ContinuousUniform, trial_seed(1, 0));
  const Eigen::MatrixXd C = controllability_matrix(r);
  for (auto _ : state) benchmark::DoNotOptimize(numeric_rank(C));
}
BENCHMARK(BM_numeric_rank)->Arg(10)->Arg(20)->Arg(40);

void BM_monte_carlo(benchmark::State& state) {
  const SignedNetwork net = fixtures::mesh5();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        monte_carlo(net, static_cast<int>(state.range(0)), SampleMode::ContinuousUniform, 1));
}
BENCHMARK(BM_monte_carlo)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
