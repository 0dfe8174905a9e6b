#include <benchmark/benchmark.h>

#include "activesum/active_sum.hpp"
#include "activesum/catalog.hpp"
#include "activesum/coxeter.hpp"
#include "activesum/todd_coxeter.hpp"

using namespace activesum;

static void BM_CoxeterH3(benchmark::State &state) {
  Presentation p = CoxeterMatrix::type_h3().presentation();
  for (auto _ : state) {
    CosetTable t = todd_coxeter(p, {});
    benchmark::DoNotOptimize(t.coset_count());
  }
}
BENCHMARK(BM_CoxeterH3);

static void BM_CoxeterB3Felsch(benchmark::State &state) {
  Presentation p = CoxeterMatrix::type_b(3).presentation();
  TcOptions options;
  options.strategy = TcStrategy::Felsch;
  for (auto _ : state) {
    CosetTable t = todd_coxeter(p, {}, options);
    benchmark::DoNotOptimize(t.coset_count());
  }
}
BENCHMARK(BM_CoxeterB3Felsch);

static void BM_LargeDihedral(benchmark::State &state) {
  unsigned m = static_cast<unsigned>(state.range(0));
  Presentation p = CoxeterMatrix::type_i2(m).presentation();
  for (auto _ : state) {
    CosetTable t = todd_coxeter(p, {});
    benchmark::DoNotOptimize(t.coset_count());
  }
}
BENCHMARK(BM_LargeDihedral)->Arg(100)->Arg(1000);

static void BM_ActiveSumS4(benchmark::State &state) {
  PermGroup s4 = symmetric_group(4);
  SubgroupFamily fam = cyclic_family(s4, 2);
  for (auto _ : state) {
    ActiveSumResult r = realize_active_sum(s4, fam, Encoding::Cyclic);
    benchmark::DoNotOptimize(r.order_S);
  }
}
BENCHMARK(BM_ActiveSumS4);

BENCHMARK_MAIN();
