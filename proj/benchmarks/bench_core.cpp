#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "connective/category.hpp"
#include "connective/conncat.hpp"
#include "connective/dynamics.hpp"
#include "connective/order.hpp"
#include "connective/representation.hpp"
#include "connective/space.hpp"

using namespace connective;

namespace {

Space random_graph_space(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.3);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edge(rng)) edges.emplace_back(a, b);
  return graph_to_space(n, edges);
}

Family random_seed_family(int n, int members, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Subset> pick(1, full_set(n));
  Family f{kEmpty};
  for (int i = 0; i < members; ++i) f.insert(pick(rng));
  return f;
}

}  // namespace

static void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Family seed = random_seed_family(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(generate(n, seed, true));
}
BENCHMARK(BM_Generate)->DenseRange(4, 10, 2);

static void BM_ValidateStructure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Space sp = random_graph_space(n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(validate_structure(n, sp.connected()));
}
BENCHMARK(BM_ValidateStructure)->DenseRange(4, 10, 2);

static void BM_ConnectivityOrder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Space sp = random_graph_space(n, 13);
  for (auto _ : state) benchmark::DoNotOptimize(connectivity_order(sp));
}
BENCHMARK(BM_ConnectivityOrder)->DenseRange(3, 7, 1);

static void BM_CanonicalDevice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Space sp = random_graph_space(n, 17);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_device(sp));
}
BENCHMARK(BM_CanonicalDevice)->DenseRange(3, 7, 1);

static void BM_CanonicalDouble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Space sp = random_graph_space(n, 19);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_double(sp));
}
BENCHMARK(BM_CanonicalDouble)->DenseRange(3, 7, 1);

static void BM_TransitionCategory(benchmark::State& state) {
  Dynamics a = xi(chain_category(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(tc(a));
}
BENCHMARK(BM_TransitionCategory)->DenseRange(2, 8, 2);

static void BM_BrunnianOrder(benchmark::State& state) {
  FinCat c = cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brunnian_order(c));
}
BENCHMARK(BM_BrunnianOrder)->DenseRange(2, 5, 1);
BENCHMARK_MAIN();
