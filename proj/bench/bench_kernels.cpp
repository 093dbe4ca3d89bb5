// Copyright 2026 The Authors.
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

#include "matkl/kl.hpp"
#include "matkl/lattice.hpp"
#include "matkl/matroid.hpp"

namespace {

using namespace matkl;

void BM_FlatsReference(benchmark::State& state) {
  const auto m = family_matroid(Family::fan, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flats_reference(m));
}

void BM_FlatsSerial(benchmark::State& state) {
  const auto m = family_matroid(Family::fan, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flats(m, Execution::serial));
}

void BM_FlatsParallel(benchmark::State& state) {
  const auto m = family_matroid(Family::fan, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flats(m, Execution::parallel));
}

void BM_KlSerial(benchmark::State& state) {
  const auto lattice = FlatLattice::of(family_matroid(Family::wheel, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    KlEngine engine(Execution::serial);
    benchmark::DoNotOptimize(engine.kl(lattice));
  }
}

void BM_KlParallel(benchmark::State& state) {
  const auto lattice = FlatLattice::of(family_matroid(Family::wheel, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    KlEngine engine(Execution::parallel);
    benchmark::DoNotOptimize(engine.kl(lattice));
  }
}

void BM_KlRecurrence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kl_recurrence_table(Family::wheel, static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_FlatsReference)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlatsSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlatsParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KlSerial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KlParallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KlRecurrence)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
