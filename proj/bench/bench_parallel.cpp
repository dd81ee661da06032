// Copyright 2026 The qrobust Authors
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

// Serial reference vs OpenMP kernels. Both paths produce identical results
// (checked in the unit tests); this measures only wall time.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qrobust/corpus.hpp"
#include "qrobust/oracle.hpp"
#include "qrobust/sampling.hpp"
#include "qrobust/wootters.hpp"

namespace {

using namespace qrobust;

void BM_CorpusSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_corpus_serial(Ensemble::ginibre, n, 0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CorpusParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_corpus(Ensemble::ginibre, n, 0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

DensityMatrix entangled_state() {
  for (std::uint64_t i = 0;; ++i) {
    const DensityMatrix rho = sample_state(Ensemble::ginibre, derive_seed(0, i));
    const WoottersDecomposition d = decompose(rho);
    if (d.full_rank() && d.concurrence > 0.1) return rho;
  }
}

void oracle_run(benchmark::State& state, bool parallel) {
  const DensityMatrix rho = entangled_state();
  OracleOptions opt;
  opt.parallel = parallel;
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimize_absolute_robustness(rho, budget, 0, opt));
  state.SetItemsProcessed(state.iterations() * budget);
  state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
}

void BM_OracleSerial(benchmark::State& state) { oracle_run(state, false); }
void BM_OracleParallel(benchmark::State& state) { oracle_run(state, true); }

BENCHMARK(BM_CorpusSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_OracleParallel)->Arg(8)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
