// Copyright 2026 the sdh authors
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "sdh/constructions.hpp"
#include "sdh/gf3.hpp"

namespace {

sdh::Gf3Vector random_vector(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> trits(n);
  for (int i = 0; i < n; ++i) {
    trits[i] = static_cast<int>(rng() % 3);
  }
  return sdh::Gf3Vector::from_trits(trits);
}

void BM_VectorAdd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sdh::Gf3Vector a = random_vector(n, 1);
  const sdh::Gf3Vector b = random_vector(n, 2);
  for (auto _ : state) {
    a.add_in_place(b);
    benchmark::DoNotOptimize(a);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_VectorAdd)->Arg(60)->Arg(960);

void BM_VectorDot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sdh::Gf3Vector a = random_vector(n, 3);
  const sdh::Gf3Vector b = random_vector(n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.dot(b));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_VectorDot)->Arg(60)->Arg(960);

void BM_RrefNv29(benchmark::State& state) {
  const sdh::TernaryCode code =
      sdh::build_nv_code(sdh::NvParameters::make(29, 1));
  const sdh::Gf3Matrix gen = code.generator();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdh::rref(gen));
  }
}
BENCHMARK(BM_RrefNv29);

void BM_BuildNvCode(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdh::build_nv_code(sdh::NvParameters::make(29, 1)));
  }
}
BENCHMARK(BM_BuildNvCode);

}  // namespace

BENCHMARK_MAIN();
