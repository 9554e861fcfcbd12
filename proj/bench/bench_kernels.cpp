// Copyright 2026 The rfient Authors
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

#include <array>
#include <vector>

#include "rfient/adaptive.hpp"
#include "rfient/bounds.hpp"
#include "rfient/montecarlo.hpp"
#include "rfient/rfi_quantities.hpp"
#include "rfient/state_algebra.hpp"

namespace {

using rfient::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_Scatter(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto rows = rfient::scatter(rfient::Ensemble::kGinibre, 7, count, mode(state));
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ReduceResiduals(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  auto residual = [](std::uint64_t k) {
    const auto rho = rfient::sample_state(rfient::Ensemble::kGinibre, 11, k);
    return rfient::lower_bound_residual(rfient::q2(rfient::pauli_table(rho)),
                                        rfient::concurrence(rho));
  };
  for (auto _ : state) {
    auto r = rfient::reduce_residuals(count, 1e-9, residual, mode(state));
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Predict(benchmark::State& state) {
  const rfient::SchmidtFrameEnsemble ensemble(static_cast<int>(state.range(0)), 3);
  const std::array<rfient::Setting, 3> settings{{{1, 1}, {2, 2}, {3, 3}}};
  const std::array<rfient::Measured, 3> values{{{-0.9, 0.01}, {0.88, 0.01}, {0.91, 0.01}}};
  for (auto _ : state) {
    auto p = ensemble.predict(settings, values, 0.02, mode(state));
    benchmark::DoNotOptimize(p);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Second argument: 0 serial reference, 1 OpenMP.
BENCHMARK(BM_Scatter)->ArgsProduct({{4096, 32768}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReduceResiduals)->ArgsProduct({{4096, 32768}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Predict)->ArgsProduct({{20000, 200000}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
