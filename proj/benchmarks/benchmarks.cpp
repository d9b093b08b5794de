#include <benchmark/benchmark.h>

#include <cstddef>
#include <string>

#include "galbrauer/cohomology.hpp"
#include "galbrauer/homspace.hpp"
#include "galbrauer/seeded_rng.hpp"

namespace {

using namespace galbrauer;

void bm_smith_normal_form(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SeededRng rng(12);
  const IntMatrix a = rng.matrix(n, n, -9, 9);
  for (auto _ : state) {
    SnfDecomposition d = snf(a);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_smith_normal_form)->Arg(8)->Arg(16)->Arg(32);

void bm_cohomology_regular_module(benchmark::State& state) {
  const std::size_t order = static_cast<std::size_t>(state.range(0));
  const GammaModule m = regular_module(FiniteGroup::cyclic(order));
  for (auto _ : state) {
    AbStructure h = cohomology(m, 3);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_cohomology_regular_module)->Arg(4)->Arg(6);

// Rank-three module over Z/6 whose carrier has torsion; this is the load
// that exercises the blockwise-reduced elimination.
GammaModule presented_carrier_module() {
  const FiniteGroup g = FiniteGroup::cyclic(6);
  IntMatrix w = IntMatrix::identity(3);
  w.add_row_multiple(0, 1, Int(2));
  w.add_row_multiple(2, 0, Int(-2));
  w.add_row_multiple(1, 2, Int(1));
  const IntMatrix b = IntMatrix::from_rows({{0, -1, 0}, {1, 1, 0}, {0, 0, 1}});
  const IntMatrix a = w * b * unimodular_inverse(w);
  IntMatrix rel = IntMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i)
    rel(i, i) = 4;
  return make_module_from_generators(g, FpAbGroup{3, rel}, {{1, a}});
}

void bm_cohomology_presented_carrier(benchmark::State& state) {
  const std::size_t degree = static_cast<std::size_t>(state.range(0));
  const GammaModule m = presented_carrier_module();
  for (auto _ : state) {
    AbStructure h = cohomology(m, degree);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_cohomology_presented_carrier)->Arg(2)->Arg(3);

void bm_evaluate_corpus(benchmark::State& state, const std::string& name) {
  const CorpusEntry entry = corpus(name);
  EvalFlags flags;
  flags.X_has_rational_point = true;
  for (auto _ : state) {
    HomSpaceReport r =
        evaluate(entry.input->group, entry.input->stabilizer, flags);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK_CAPTURE(bm_evaluate_corpus, pgl2, "pgl2");
BENCHMARK_CAPTURE(bm_evaluate_corpus, norm_one_torus_s3, "norm_one_torus:s3");

} // namespace

BENCHMARK_MAIN();
