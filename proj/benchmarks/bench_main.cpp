// Copyright 2026 The tpg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tpg/equilibrium.hpp"
#include "tpg/game.hpp"
#include "tpg/reductions.hpp"
#include "tpg/solver.hpp"

namespace {

using namespace tpg;

void BM_payoffs(benchmark::State& state) {
  AvailabilityMatrix b = random_instance(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(0)), 5, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(payoffs(b));
  }
}
BENCHMARK(BM_payoffs)->Arg(4)->Arg(16)->Arg(64);

void BM_find_improvement_step(benchmark::State& state) {
  AvailabilityMatrix a = random_instance(6, 6, static_cast<long long>(state.range(0)), 7);
  Coalition c = Coalition::of({0, 2, 4}, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_improvement_step(a, a, c));
  }
}
BENCHMARK(BM_find_improvement_step)->Arg(3)->Arg(10)->Arg(50);

void BM_brute_force_improvement(benchmark::State& state) {
  AvailabilityMatrix a = random_instance(6, 6, static_cast<long long>(state.range(0)), 7);
  Coalition c = Coalition::of({0, 2, 4}, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_improvement(a, a, c));
  }
}
BENCHMARK(BM_brute_force_improvement)->Arg(1)->Arg(2)->Arg(3);

void BM_find_improvement_any(benchmark::State& state) {
  AvailabilityMatrix a = random_instance(8, 5, 3, 11);
  SearchOptions options;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_improvement_any(a, a, 3, options));
  }
}
BENCHMARK(BM_find_improvement_any)->Arg(1)->Arg(4);

void BM_exhaustive_ne_search(benchmark::State& state) {
  AvailabilityMatrix a(3, 2, {2, 0, 2, 2, 0, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_ne_search(a, 2));
  }
}
BENCHMARK(BM_exhaustive_ne_search);

void BM_construct_1strong(benchmark::State& state) {
  AvailabilityMatrix a = random_instance(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(0)), 3, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_1strong_ne(a));
  }
}
BENCHMARK(BM_construct_1strong)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
