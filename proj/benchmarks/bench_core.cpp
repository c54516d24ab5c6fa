#include <random>

#include <benchmark/benchmark.h>

#include "bethck/closure.hpp"
#include "bethck/finite_model.hpp"
#include "bethck/zrelation.hpp"

namespace {

void BM_UnionIntersect(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto a = bethck::random_upset(rng, state.range(0), state.range(0));
  const auto b = bethck::random_upset(rng, state.range(0), state.range(0) / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize((a | b) & ~a);
}
BENCHMARK(BM_UnionIntersect)->Arg(16)->Arg(128)->Arg(1024);

void BM_Closure(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto a = bethck::random_upset(rng, state.range(0), 9 * 4);
  for (auto _ : state) benchmark::DoNotOptimize(bethck::closure(a));
}
BENCHMARK(BM_Closure)->Arg(16)->Arg(256);

void BM_ZMember(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto p = bethck::random_member_pair(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bethck::z_member(p));
}
BENCHMARK(BM_ZMember)->Arg(0)->Arg(4);

void BM_SuccWitness(benchmark::State& state) {
  const bethck::ZPair p{{bethck::Side::m1, bethck::base_v(), {2}}, {bethck::Side::m2, bethck::base_u(), {5}}};
  const auto target = bethck::u_world_from_third(bethck::base_v().c - bethck::UPSet::from_finite({5}));
  for (auto _ : state) benchmark::DoNotOptimize(bethck::succ_witness(p, target));
}
BENCHMARK(BM_SuccWitness);

void BM_ModelsT(benchmark::State& state) {
  const auto models = bethck::enumerate_models(3, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bethck::models_T(models[i++ % models.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ModelsT);

}  // namespace
BENCHMARK_MAIN();
