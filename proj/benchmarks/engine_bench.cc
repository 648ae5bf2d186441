// Copyright 2026 The gnps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "gnps/catalog.h"
#include "gnps/engine.h"
#include "gnps/protocols.h"
#include "gnps/resources.h"

using namespace gnps;

static void BM_run_theorem1(benchmark::State &state) {
    auto set = build_g3();
    auto res = ghz_resource({"A", "B", "C"});
    auto p = build_theorem1_protocol();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exhaustive(p, set, res));
    }
}
BENCHMARK(BM_run_theorem1)->Unit(benchmark::kMillisecond);

static void BM_run_ghz_family(benchmark::State &state) {
    size_t m = static_cast<size_t>(state.range(0));
    auto set = build_g_general(m);
    auto res = ghz_resource(party_names(set.layout));
    auto p = build_prop3_protocol(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exhaustive(p, set, res));
    }
}
BENCHMARK(BM_run_ghz_family)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_run_sigma(benchmark::State &state) {
    auto set = build_sigma();
    auto res = ghz_resource(party_names(set.layout), 4);
    auto p = build_prop5_protocol();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exhaustive(p, set, res));
    }
}
BENCHMARK(BM_run_sigma)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_run_theorem1_float(benchmark::State &state) {
    auto set = to_float(build_g3());
    auto res = weighted_ghz_float({"A", "B", "C"}, 0.6, 0.8);
    auto p = build_theorem1_protocol();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exhaustive(p, set, res));
    }
}
BENCHMARK(BM_run_theorem1_float)->Unit(benchmark::kMillisecond);
