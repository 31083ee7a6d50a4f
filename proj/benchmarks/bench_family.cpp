#include <random>

#include <benchmark/benchmark.h>

#include "maskent/identities.hpp"
#include "maskent/tightness.hpp"
#include "maskent/verify.hpp"

using namespace maskent;

static void BM_BuildField(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_field_of_order(q));
}
BENCHMARK(BM_BuildField)->Arg(16)->Arg(243)->Arg(1024)->Arg(4096);

static void BM_FamilyAverages(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  const FunctionTable f = random_table(build_field_of_order(q), n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(family_averages(f));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.domain_size() * f.domain_size()));
}
BENCHMARK(BM_FamilyAverages)->Args({2, 4})->Args({5, 2})->Args({9, 2})->Args({9, 3})->Unit(benchmark::kMicrosecond);

static void BM_JointEnumerated(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const FunctionTable f = square_family(q, 2);
  for (auto _ : state) benchmark::DoNotOptimize(joint_collision_enumerated(f));
}
BENCHMARK(BM_JointEnumerated)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_JointPairwise(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const FunctionTable f = square_family(q, 2);
  for (auto _ : state) benchmark::DoNotOptimize(joint_collision_pairwise(f));
}
BENCHMARK(BM_JointPairwise)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_Hillclimb(benchmark::State& state) {
  CampaignConfig c;
  c.q = 2;
  c.n = 2;
  c.mode = CampaignMode::hillclimb;
  c.iters = 1000;
  c.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hillclimb_search(c));
}
BENCHMARK(BM_Hillclimb)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
