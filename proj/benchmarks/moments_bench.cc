// Copyright 2026 The prslab Authors
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

#include "prslab/johnson.h"
#include "prslab/moments.h"

namespace {

void BM_HaarMoment(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(prslab::HaarMoment(d, k));
}
BENCHMARK(BM_HaarMoment)->Args({8, 2})->Args({6, 3})->Args({12, 3})->Unit(benchmark::kMillisecond);

void BM_SubsetMomentEnum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int s = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(prslab::SubsetMomentEnum(d, s, k));
}
BENCHMARK(BM_SubsetMomentEnum)->Args({8, 4, 2})->Args({10, 5, 3})->Args({12, 6, 3})->Unit(benchmark::kMillisecond);

void BM_SubsetMomentProjected(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int s = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(prslab::SubsetMomentProjected(d, s, k));
}
BENCHMARK(BM_SubsetMomentProjected)->Args({8, 4, 2})->Args({12, 6, 3})->Unit(benchmark::kMillisecond);

void BM_DTildeDirect(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(prslab::DTildeDirect(d, d - 1, k));
}
BENCHMARK(BM_DTildeDirect)->Args({8, 2})->Args({10, 3})->Unit(benchmark::kMillisecond);

void BM_ClosedFormSpectrum(benchmark::State& state) {
  const prslab::JohnsonGraphSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                                      static_cast<int>(state.range(2))};
  for (auto _ : state) benchmark::DoNotOptimize(prslab::ClosedFormSpectrum(spec));
}
BENCHMARK(BM_ClosedFormSpectrum)->Args({12, 3, 1})->Args({64, 8, 3})->Args({400, 20, 10});

}  // namespace
