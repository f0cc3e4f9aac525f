#include <benchmark/benchmark.h>

#include "latgerm/atf.hpp"
#include "latgerm/germ.hpp"
#include "latgerm/markov.hpp"

using namespace latgerm;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  IntMatrix m(rows, cols);
  for (auto& x : m.data) x = Int(rng.range(-9, 9));
  return m;
}

void BM_HnfCanonical4x4(benchmark::State& state) {
  Rng rng(1);
  IntMatrix m = random_matrix(4, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf_canonical(m));
  }
}

void BM_IntegralIndexTriples(benchmark::State& state) {
  Germ g = germ_theta(delta_m({1, 1}), Rat(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_index(g.vectors()));
  }
}

void BM_MarkovTree1000(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(markov_tree(1000));
  }
}

void BM_DeltaMDepth(benchmark::State& state) {
  std::vector<int> path(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_m(path));
  }
}

void BM_ExtractGerm(benchmark::State& state) {
  UpsilonParams p(2, Rat(3), Rat(1));
  PiecewiseMin pw = upsilon_versal_pieces(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_germ(pw));
  }
}

void BM_GermEquivalent(benchmark::State& state) {
  Germ left = germ_theta(delta_m({1}), Rat(3));
  Germ right = germ_theta(delta_m({1, 1}), Rat(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(germ_equivalent(left, right));
  }
}

void BM_DiaInvariance(benchmark::State& state) {
  MarkovWalk walk;
  ATFDiagram before = walk.diagram();
  PiecewiseShear tau = walk.step(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_dia_invariance(before, walk.diagram(), tau, static_cast<std::size_t>(state.range(0)), 0));
  }
}

}  // namespace

BENCHMARK(BM_HnfCanonical4x4);
BENCHMARK(BM_IntegralIndexTriples);
BENCHMARK(BM_MarkovTree1000);
BENCHMARK(BM_DeltaMDepth)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_ExtractGerm);
BENCHMARK(BM_GermEquivalent);
BENCHMARK(BM_DiaInvariance)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
