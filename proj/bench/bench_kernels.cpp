// Serial reference enumerations against the pruned OpenMP kernels.
#include <benchmark/benchmark.h>

#include "hafs/equations.hpp"
#include "hafs/extensions.hpp"
#include "hafs/labellings.hpp"
#include "hafs/reference.hpp"

namespace {

hafs::Framework make(std::int64_t size) {
  hafs::RandomOptions o;
  o.num_arguments = static_cast<std::size_t>(size / 2);
  o.num_attacks = static_cast<std::size_t>(size - size / 2 - size / 4);
  o.num_supports = static_cast<std::size_t>(size / 4);
  o.seed = 7;
  o.higher_order_prob = 0.3;
  return hafs::generate_random(o);
}

void BM_LabellingsReference(benchmark::State& state) {
  auto h = make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hafs::reference::enumerate_adjacent_complete(h));
}

void BM_LabellingsKernel(benchmark::State& state) {
  auto h = make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hafs::enumerate_adjacent_complete(h));
}

void BM_ExtensionsReference(benchmark::State& state) {
  auto h = make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hafs::reference::complete_extensions(h));
}

void BM_ExtensionsKernel(benchmark::State& state) {
  auto h = make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hafs::complete_extensions(h));
}

void BM_TernaryReference(benchmark::State& state) {
  auto h = make(state.range(0));
  hafs::EquationSystem sys(h, hafs::LogicSystem::godel());
  for (auto _ : state) benchmark::DoNotOptimize(hafs::reference::enumerate_ternary_solutions(sys));
}

void BM_TernaryKernel(benchmark::State& state) {
  auto h = make(state.range(0));
  hafs::EquationSystem sys(h, hafs::LogicSystem::godel());
  for (auto _ : state) benchmark::DoNotOptimize(hafs::enumerate_ternary_solutions(sys));
}

}  // namespace

BENCHMARK(BM_LabellingsReference)->Arg(8)->Arg(10);
BENCHMARK(BM_LabellingsKernel)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_ExtensionsReference)->Arg(8)->Arg(12);
BENCHMARK(BM_ExtensionsKernel)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_TernaryReference)->Arg(8)->Arg(10);
BENCHMARK(BM_TernaryKernel)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
