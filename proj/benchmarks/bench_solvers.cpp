// Copyright 2026 The bincover authors
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

#include "bincover/aptas.hpp"
#include "bincover/approx.hpp"
#include "bincover/exact.hpp"
#include "bincover/generators.hpp"
#include "bincover/matching.hpp"
#include "bincover/nfd.hpp"

namespace {

using namespace bincover;

Instance random_instance(std::size_t n, std::size_t m, bool variable, std::uint64_t seed,
                         Supply supply = Supply::kUnit) {
  RandomSpec spec;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.supply = supply;
  spec.problem_class = variable ? ProblemClass::kVariableSized : ProblemClass::kGeneralized;
  spec.demand_lo = Rat(1, 4);
  spec.demand_hi = Rat(3);
  spec.size_lo = Rat(1, 4);
  spec.size_hi = Rat(3);
  return gen_random(spec);
}

void BM_Nfd(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(n, n / 10 + 1, true, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nfd(inst).value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Nfd)->Arg(1000)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Gbc5(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(n, n, false, 43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gbc5(inst).value);
  }
}
BENCHMARK(BM_Gbc5)->Arg(100)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Matching(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const BipartiteGraph g = build_graph(random_instance(n, n, false, 44));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_weight_matching(g).weight);
  }
}
BENCHMARK(BM_Matching)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_AlgStar(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(n, n, false, 45);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alg_star(inst).parts.size());
  }
}
BENCHMARK(BM_AlgStar)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_ExactOracle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(n, 4, true, 46);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_opt_unit(inst).value);
  }
}
BENCHMARK(BM_ExactOracle)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_SplittableLp(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(n, n, false, 47);
  const Lp1Model model = build_lp1(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_solve(model.lp).objective);
  }
}
BENCHMARK(BM_SplittableLp)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Aptas(benchmark::State& state) {
  const Instance inst = random_instance(10, 3, true, 48, Supply::kInfinite);
  AptasParams params;
  params.group_count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aptas_solve(inst, params).value);
  }
}
BENCHMARK(BM_Aptas)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
