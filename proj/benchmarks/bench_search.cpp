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

#include <benchmark/benchmark.h>

#include "sdh/constructions.hpp"
#include "sdh/equivalence.hpp"
#include "sdh/hadamard.hpp"
#include "sdh/search.hpp"

namespace {

void BM_FullWeightPless11(benchmark::State& state) {
  const sdh::TernaryCode code = sdh::build_pless_symmetry(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdh::enumerate_full_weight(code));
  }
}
BENCHMARK(BM_FullWeightPless11);

void BM_FullWeightPless17(benchmark::State& state) {
  const sdh::TernaryCode code = sdh::build_pless_symmetry(17);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdh::enumerate_full_weight(code, threads));
  }
}
BENCHMARK(BM_FullWeightPless17)->Arg(1)->Arg(0);

void BM_MinWeightQr11(benchmark::State& state) {
  const sdh::TernaryCode code = sdh::build_extended_qr(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdh::min_weight_bz(code));
  }
}
BENCHMARK(BM_MinWeightQr11);

void BM_CanonicalHnv5(benchmark::State& state) {
  const sdh::HadamardMatrix h = sdh::build_h_nv(5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdh::canonical_form(h));
  }
}
BENCHMARK(BM_CanonicalHnv5);

}  // namespace

BENCHMARK_MAIN();
