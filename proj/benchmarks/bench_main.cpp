// Copyright 2026 The mhgr Authors
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

#include "mhgr/autgroup.hpp"
#include "mhgr/constructions.hpp"
#include "mhgr/group_io.hpp"
#include "mhgr/regular_graphs.hpp"
#include "mhgr/search.hpp"

namespace {

using namespace mhgr;

std::shared_ptr<const Group> group(const char* spec) {
  return std::make_shared<const Group>(parse_group_spec(spec));
}

void BM_AutHypercube(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (!(v >> b & 1)) g.add_edge(v, v | (1 << b));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).order);
}
BENCHMARK(BM_AutHypercube)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VerifyGamma3(benchmark::State& state) {
  const char* specs[] = {"C2^4", "C2^5", "C3^4", "C2^4xC3"};
  auto g = group(specs[state.range(0)]);
  const ConnectionMatrix cm = gamma3(g);
  for (auto _ : state) benchmark::DoNotOptimize(is_m_hgr(cm).holds);
  state.SetLabel(specs[state.range(0)]);
}
BENCHMARK(BM_VerifyGamma3)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const char* specs[] = {"C2^2", "C5", "D6"};
  auto g = group(specs[state.range(0)]);
  SearchOptions o;
  o.mode = state.range(1) ? SearchMode::kNormalized : SearchMode::kExhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(decide_existence(g, 3, o).regular_candidates);
  state.SetLabel(std::string(specs[state.range(0)]) + (state.range(1) ? " normalized" : " exhaustive"));
}
BENCHMARK(BM_Search)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RegularGraphScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int count = 0;
    for (int k = 0; k < n; ++k)
      for_each_regular_graph(n, k, [&](const Graph&) {
        ++count;
        return true;
      });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_RegularGraphScan)->DenseRange(7, 10)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  auto g = group("C2^4xC3");
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(g, m, true).exists());
}
BENCHMARK(BM_Synthesize)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
