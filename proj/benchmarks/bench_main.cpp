// Copyright 2026 The rdom Authors.
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

#include "rdom/bfs.hpp"
#include "rdom/generators.hpp"
#include "rdom/kernel.hpp"
#include "rdom/orderings.hpp"
#include "rdom/profiles.hpp"

using namespace rdom;

static void BM_BoundedBfs(benchmark::State& state) {
  const Graph g = grid_graph(state.range(0), state.range(0));
  BoundedBfs bfs(g);
  Vertex source = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs.run(source, 3).size());
    source = (source + 97) % g.num_vertices();
  }
}
BENCHMARK(BM_BoundedBfs)->Arg(32)->Arg(128);

static void BM_NuTwoOnGrid(benchmark::State& state) {
  const std::size_t m = state.range(0);
  const Graph g = grid_graph(m, m);
  const VertexSet a = random_subset(m * m, 64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nu_r(g, a, 2));
}
BENCHMARK(BM_NuTwoOnGrid)->Arg(16)->Arg(64);

static void BM_WcolDegeneracy(benchmark::State& state) {
  const Graph g = random_bounded_degree_graph(state.range(0), 4, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(wcol_of_order(g, degeneracy_order(g), 2));
}
BENCHMARK(BM_WcolDegeneracy)->Arg(1000)->Arg(10000);

static void BM_Kernelize(benchmark::State& state) {
  const Graph g = random_bounded_degree_graph(state.range(0), 3, 11);
  const std::size_t k = state.range(0) / 4;
  KernelOptions opts;
  opts.target = 0;
  for (auto _ : state) {
    const KernelResult res = kernelize(DominationInstance::whole(g, 1, k), opts);
    benchmark::DoNotOptimize(res.rejected());
  }
}
BENCHMARK(BM_Kernelize)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_SpiderKernel(benchmark::State& state) {
  const std::size_t k = state.range(0);
  const Graph g = spider_graph(k, 2);
  for (auto _ : state) {
    const KernelResult res = kernelize(DominationInstance::whole(g, 1, k), {});
    benchmark::DoNotOptimize(res.g_prime.num_vertices());
  }
}
BENCHMARK(BM_SpiderKernel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
