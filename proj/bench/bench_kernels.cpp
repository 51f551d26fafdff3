// Copyright 2026 The mlalg Authors
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


// Serial against OpenMP-parallel triple-loop kernels on order-60 tables.

#include <benchmark/benchmark.h>

#include "mla/actions.hpp"
#include "mla/fixtures.hpp"
#include "mla/mla.hpp"

namespace {

mla::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? mla::Exec::serial : mla::Exec::parallel;
}

void BM_StarAxioms(benchmark::State& state) {
  const mla::MlaPtr a = mla::fixtures::a5c();
  const mla::Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(mla::verify_star_axioms(*a, exec).ok());
}
BENCHMARK(BM_StarAxioms)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_BracketIdentity(benchmark::State& state) {
  const mla::MutualAction act = mla::conjugation_action(mla::fixtures::a5c());
  const mla::Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(mla::bracket_identity_check(act, exec).ok());
}
BENCHMARK(BM_BracketIdentity)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Compatibility(benchmark::State& state) {
  const mla::MutualAction act = mla::conjugation_action(mla::fixtures::a5c());
  const mla::Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(mla::verify_compatibility(act, exec).ok());
}
BENCHMARK(BM_Compatibility)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
