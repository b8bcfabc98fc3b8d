#include <benchmark/benchmark.h>

#include <random>

#include "recore/dsp_opt.hpp"
#include "recore/io.hpp"
#include "recore/oracle.hpp"
#include "recore/reach.hpp"

namespace {

using namespace recore;

Graph fixture_graph() {
  return Graph(6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

Graph gadget_union(int count, int size) {
  std::vector<std::pair<int, int>> edges;
  for (int gi = 0; gi < count; ++gi) {
    int base = gi * size;
    edges.emplace_back(base, base + 1);
    for (int p = base + 2; p < base + size; ++p) {
      edges.emplace_back(base, p);
      edges.emplace_back(base + 1, p);
    }
  }
  return Graph(count * size, std::move(edges));
}

Graph random_connected(uint64_t seed, int n, double extra) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng() % static_cast<uint64_t>(v)), v);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < extra) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

void BM_ParseDimacs(benchmark::State& state) {
  Graph g = random_connected(7, static_cast<int>(state.range(0)), 0.02);
  std::string text = serialize_dimacs(g);
  for (auto _ : state) {
    Graph parsed = parse_dimacs(text);
    benchmark::DoNotOptimize(parsed.edge_count());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseDimacs)->Arg(100)->Arg(1000);

void BM_IsDominating(benchmark::State& state) {
  Graph g = random_connected(11, static_cast<int>(state.range(0)), 0.05);
  StateSet s = greedy_dominating_set(g);
  for (auto _ : state) benchmark::DoNotOptimize(is_dominating(g, s));
}
BENCHMARK(BM_IsDominating)->Arg(100)->Arg(1000);

void BM_SolveFixtureTj(benchmark::State& state) {
  Graph g = fixture_graph();
  StateSet start = StateSet::of(6, {1, 4});
  StateSet goal = StateSet::of(6, {2, 3});
  Instance inst = make_instance(g, start, goal, Rule::TokenJumping);
  SolveConfig cfg;
  cfg.hints = {encode::Hint::T1, encode::Hint::T2, encode::Hint::T3};
  for (auto _ : state) {
    ReconfigResult r = solve_reachability(inst, cfg);
    benchmark::DoNotOptimize(r.length);
  }
}
BENCHMARK(BM_SolveFixtureTj);

void BM_UnreachableCycle(benchmark::State& state) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  Graph g(6, std::move(edges));
  Instance inst = make_instance(g, StateSet::of(6, {0, 3}), StateSet::of(6, {1, 4}),
                                Rule::TokenJumping);
  SolveConfig cfg;
  cfg.prove_unreachable = true;
  for (auto _ : state) {
    ReconfigResult r = solve_reachability(inst, cfg);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_UnreachableCycle);

void BM_MinimizeGadgets(benchmark::State& state) {
  Graph g = gadget_union(static_cast<int>(state.range(0)), 20);
  for (auto _ : state) {
    MinimizeResult r = minimize_dominating_set(g, encode::EncodingVariant::Base1,
                                               OptStrategy::FromAbove);
    benchmark::DoNotOptimize(r.k);
  }
}
BENCHMARK(BM_MinimizeGadgets)->Arg(3)->Arg(6);

// timing axis of the encoding-by-strategy comparison; agreement between
// the four combinations is covered by the test suites
void BM_MinimizeVariantStrategy(benchmark::State& state) {
  Graph g = random_connected(99, 60, 0.06);
  auto variant = state.range(0) == 0 ? encode::EncodingVariant::Base1
                                     : encode::EncodingVariant::Base2;
  auto strategy = state.range(1) == 0 ? OptStrategy::FromAbove : OptStrategy::FromBelow;
  for (auto _ : state) {
    MinimizeResult r = minimize_dominating_set(g, variant, strategy);
    benchmark::DoNotOptimize(r.k);
  }
}
BENCHMARK(BM_MinimizeVariantStrategy)
    ->ArgNames({"base2", "below"})
    ->Args({0, 0})
    ->Args({0, 1})
    ->Args({1, 0})
    ->Args({1, 1});

void BM_OracleSpace(benchmark::State& state) {
  Graph g = random_connected(23, static_cast<int>(state.range(0)), 0.3);
  MinimizeResult opt =
      minimize_dominating_set(g, encode::EncodingVariant::Base1, OptStrategy::FromAbove);
  for (auto _ : state) {
    SpaceGraph space = build_solution_space(g, Rule::TokenJumping, opt.k);
    benchmark::DoNotOptimize(space.states.size());
  }
}
BENCHMARK(BM_OracleSpace)->Arg(10)->Arg(14);

void BM_GadgetReachability(benchmark::State& state) {
  int count = static_cast<int>(state.range(0));
  Graph g = gadget_union(count, 12);
  StateSet start(g.node_count()), goal(g.node_count());
  for (int gi = 0; gi < count; ++gi) {
    start.insert(gi * 12);
    goal.insert(gi * 12 + 1);
  }
  Instance inst = make_instance(g, start, goal, Rule::TokenJumping);
  SolveConfig cfg;
  cfg.hints = {encode::Hint::T1, encode::Hint::T2, encode::Hint::T3};
  for (auto _ : state) {
    ReconfigResult r = solve_reachability(inst, cfg);
    benchmark::DoNotOptimize(r.length);
  }
}
BENCHMARK(BM_GadgetReachability)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
