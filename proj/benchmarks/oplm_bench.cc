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
#include "gnps/oplm.h"

using namespace gnps;

static void BM_oplm_h_standard(benchmark::State &state) {
    StateSet h = build_h();
    for (auto _ : state) {
        benchmark::DoNotOptimize(gnps_evidence(h, CutMode::standard));
    }
}
BENCHMARK(BM_oplm_h_standard)->Unit(benchmark::kMillisecond);

static void BM_oplm_g3_pair_cut(benchmark::State &state) {
    StateSet g = build_g3();
    Cut cut{{"A", "B"}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(oplm_space(g, cut));
    }
}
BENCHMARK(BM_oplm_g3_pair_cut)->Unit(benchmark::kMillisecond);

static void BM_oplm_sigma_singles(benchmark::State &state) {
    StateSet s = build_sigma();
    for (auto _ : state) {
        benchmark::DoNotOptimize(gnps_evidence(s, CutMode::singles));
    }
}
BENCHMARK(BM_oplm_sigma_singles)->Unit(benchmark::kMillisecond);
