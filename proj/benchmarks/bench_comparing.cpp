#include <benchmark/benchmark.h>

#include "evsnorm/axiom_checker.hpp"
#include "evsnorm/comparing.hpp"
#include "evsnorm/model_instances.hpp"
#include "evsnorm/norm_space.hpp"

using namespace evsnorm;

static void ClosedFormComparing(benchmark::State& state) {
  NormExpr f = NormExpr::one();
  NormExpr g = NormExpr::sup();
  SpaceSpec space = SpaceSpec::rn(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = comparing_function(f, g, space);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ClosedFormComparing)->Arg(3)->Arg(6);

static void PatternSearchComparing(benchmark::State& state) {
  NormExpr f = NormExpr::parse("p(2; w=1,1,2)");
  NormExpr g = NormExpr::sup();
  SpaceSpec space = SpaceSpec::rn(3);
  CompareConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = comparing_function(f, g, space, cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(PatternSearchComparing)->Arg(4)->Arg(32);

static void AxiomSuiteNorms(benchmark::State& state) {
  auto inst = make_norm_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = check_axioms(*inst, 7, 12, 6);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(AxiomSuiteNorms)->Arg(2)->Arg(4);

static void MinkowskiSums(benchmark::State& state) {
  auto inst = make_hyperspace_instance(2);
  auto samples = inst->sample(3, 12);
  for (auto _ : state) {
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        auto s = inst->add(a, b);
        benchmark::DoNotOptimize(s);
      }
    }
  }
}
BENCHMARK(MinkowskiSums);

BENCHMARK_MAIN();
