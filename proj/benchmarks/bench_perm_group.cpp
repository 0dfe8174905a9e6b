#include <benchmark/benchmark.h>

#include "activesum/catalog.hpp"
#include "activesum/perm_group.hpp"
#include "activesum/sl.hpp"

using namespace activesum;

static void BM_BsgsOrderSL33(benchmark::State &state) {
  for (auto _ : state) {
    auto r = sl_to_perm(3, 3);
    benchmark::DoNotOptimize(r.group.order());
  }
}
BENCHMARK(BM_BsgsOrderSL33);

static void BM_BsgsOrderSL45(benchmark::State &state) {
  for (auto _ : state) {
    auto r = sl_to_perm(4, 5);
    benchmark::DoNotOptimize(r.group.order());
  }
}
BENCHMARK(BM_BsgsOrderSL45);

static void BM_MembershipS8(benchmark::State &state) {
  PermGroup s8 = symmetric_group(8);
  Perm probe = Perm::from_cycles("(0 3 5)(1 2)(4 7 6)", 8);
  benchmark::DoNotOptimize(s8.order()); // build the chain once
  for (auto _ : state)
    benchmark::DoNotOptimize(s8.contains(probe));
}
BENCHMARK(BM_MembershipS8);

static void BM_TorsionSetA5(benchmark::State &state) {
  PermGroup a5 = alternating_group(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(torsion_set(a5, 2).size());
}
BENCHMARK(BM_TorsionSetA5);
