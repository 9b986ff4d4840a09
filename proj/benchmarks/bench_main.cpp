#include <benchmark/benchmark.h>

#include "semitruss/catalog.hpp"
#include "semitruss/congruence.hpp"
#include "semitruss/degree_table.hpp"
#include "semitruss/solution.hpp"

namespace {

using namespace semitruss;

const Solution& named(const char* name) {
  return catalog_find(name)->solution;
}

void BM_BraidCheck(benchmark::State& state) {
  const Solution& s = named("P3");
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe(s).ok);
}
BENCHMARK(BM_BraidCheck);

void BM_DegreeTable(benchmark::State& state) {
  const Solution& s = named("P3");
  int d = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        build_degree_table(s, View::additive, d).class_count(d));
}
BENCHMARK(BM_DegreeTable)->Arg(4)->Arg(6)->Arg(8);

void BM_CongruenceMu(benchmark::State& state) {
  const Solution& s = named("P3");
  int d = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        compute_congruence(s, CongruenceKind::mu, d, 2).block_count(d));
}
BENCHMARK(BM_CongruenceMu)->Arg(3)->Arg(4);

void BM_EnumerateLeftNd2(benchmark::State& state) {
  SolutionFilter filter;
  filter.left_nondegenerate = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_solutions(2, filter).size());
}
BENCHMARK(BM_EnumerateLeftNd2);

}  // namespace

BENCHMARK_MAIN();
