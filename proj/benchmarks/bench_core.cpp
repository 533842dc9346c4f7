// Copyright 2026 The erravg Authors
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

#include <random>

#include "erravg/circuits.hpp"
#include "erravg/encoding.hpp"
#include "erravg/linalg.hpp"
#include "erravg/montecarlo.hpp"
#include "erravg/random.hpp"

namespace {

using namespace erravg;

void BM_Permanent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  NetworkMatrix m(n, n);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(g(rng), g(rng));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_Permanent)->DenseRange(2, 12, 2);

void BM_CompileWhole(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto enc = encode(four_mode_circuit(0.1), {n, Encoder::tree, Strategy::whole});
  auto rng = trial_stream(42, 0);
  const auto r = sample_realization(enc.circuit, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compile(enc.circuit, r));
}
BENCHMARK(BM_CompileWhole)->RangeMultiplier(2)->Range(1, 16);

void BM_CompileKeptColumns(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto enc = encode(four_mode_circuit(0.1), {n, Encoder::tree, Strategy::whole});
  auto rng = trial_stream(42, 0);
  const auto r = sample_realization(enc.circuit, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compile_columns(enc.circuit, r, enc.kept_modes));
}
BENCHMARK(BM_CompileKeptColumns)->RangeMultiplier(2)->Range(1, 16);

// 1024 trials of two photons through the encoded four-mode circuit.
void BM_MonteCarloChunk(benchmark::State& state) {
  MCConfig c;
  c.trials = 1024;
  c.workers = 1;
  c.circuit = encode(four_mode_circuit(0.01), {static_cast<std::size_t>(state.range(0)), Encoder::tree,
                                               state.range(1) ? Strategy::each : Strategy::whole});
  c.input = FockState{1, 1, 0, 0};
  c.observables = {Observable::success(), Observable::conditional_probability({1, 1, 0, 0}, "post")};
  for (auto _ : state) benchmark::DoNotOptimize(run(c));
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_MonteCarloChunk)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
