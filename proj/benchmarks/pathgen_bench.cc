// Copyright 2026 The oclpath Authors.
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

#include "oclpath/model.hpp"
#include "oclpath/pathgen.hpp"

namespace {

using namespace oclpath;

UmlGraph complete(std::size_t n) {
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("C" + std::to_string(i));
  std::vector<GraphEdge> edges;
  for (const auto& a : nodes)
    for (const auto& b : nodes)
      if (a != b) edges.push_back({a, b, {}});
  return UmlGraph(nodes, edges);
}

void BM_CompleteDigraph(benchmark::State& state) {
  UmlGraph g = complete(static_cast<std::size_t>(state.range(0)));
  EnumerationOptions opts;
  opts.maxLen = std::nullopt;
  opts.maxPaths = 10'000'000;
  opts.parallel = state.range(1) != 0;
  std::size_t count = 0;
  for (auto _ : state) {
    auto paths = enumerate_simple_paths(g, opts);
    count = paths.size();
    benchmark::DoNotOptimize(paths);
  }
  state.counters["paths"] = static_cast<double>(count);
}
BENCHMARK(BM_CompleteDigraph)->ArgsProduct({{4, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RoyalLoyal(benchmark::State& state) {
  UmlModel model = load_model(std::string(OCLPATH_DATA_DIR) + "/royal_loyal.model.json");
  UmlGraph g = build_graph(model);
  EnumerationOptions opts = default_options(g);
  opts.maxLen = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_paths(g, opts));
}
BENCHMARK(BM_RoyalLoyal)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
