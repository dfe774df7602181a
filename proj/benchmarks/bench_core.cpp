#include <benchmark/benchmark.h>

#include <random>

#include "setalg/incidence.hpp"
#include "setalg/relational.hpp"
#include "setalg/set_function.hpp"
#include "setalg/transversal.hpp"
#include "setalg/witnesses.hpp"

using namespace setalg;

namespace {

SetFunction random_function(int ground, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SetFunction f(ground, degree);
  for (Subset s : ksubsets(ground, degree)) {
    if (rng() % 3 != 0) f.set(s, Rational(static_cast<long>(rng() % 7) - 3));
  }
  return f;
}

void BM_Product(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const SetFunction f = random_function(l, 2, 1);
  const SetFunction g = random_function(l, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(product(f, g));
}
BENCHMARK(BM_Product)->DenseRange(6, 12, 2);

void BM_InclusionRank(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const RationalMatrix m = inclusion_matrix(l, l / 2 - 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_InclusionRank)->DenseRange(6, 10, 2);

void BM_TauGadget(benchmark::State& state) {
  const WitnessPair p = gadget_lower(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const SetFamily family = p.joint_support();
  for (auto _ : state) benchmark::DoNotOptimize(tau(family));
}
BENCHMARK(BM_TauGadget)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < v; ++i) edges.emplace_back(i, (i + 1) % v);
  const RelStructure cycle = RelStructure::graph(v, edges);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(cycle));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 7, 1);

}  // namespace

BENCHMARK_MAIN();
