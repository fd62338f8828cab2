// Copyright 2026 The QuboForge Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "quboforge/compiler.hpp"
#include "quboforge/formats.hpp"
#include "quboforge/generators.hpp"
#include "quboforge/samplers.hpp"

using namespace quboforge;

namespace {

void BM_CompileTsp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Model model = tsp_model(n, random_distances(n, 1));
    for (auto _ : state) benchmark::DoNotOptimize(compile(model));
    state.counters["qubo_vars"] = static_cast<double>(n * n);
}
BENCHMARK(BM_CompileTsp)->DenseRange(5, 25, 5)->Unit(benchmark::kMillisecond);

void BM_CompileNpp(benchmark::State& state) {
    const Model model = npp_model(npp_benchmark_weights(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(compile(model));
}
BENCHMARK(BM_CompileNpp)->RangeMultiplier(4)->Range(16, 512)->Unit(benchmark::kMillisecond);

void BM_SimulatedAnnealing(benchmark::State& state) {
    const QuboInstance q = random_qubo(static_cast<std::size_t>(state.range(0)), 0.3, 7);
    SamplerParams p;
    p.num_reads = 10;
    p.seed = 1;
    p.attributes["sweeps"] = std::int64_t{100};
    for (auto _ : state) benchmark::DoNotOptimize(simulated_annealing(q, p));
    state.SetItemsProcessed(state.iterations() * 10 * 100 * state.range(0));
}
BENCHMARK(BM_SimulatedAnnealing)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_BqpJsonRoundTrip(benchmark::State& state) {
    const QuboInstance q = random_qubo(static_cast<std::size_t>(state.range(0)), 0.2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(read_bqpjson(write_bqpjson(q)));
}
BENCHMARK(BM_BqpJsonRoundTrip)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
