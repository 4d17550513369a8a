// Copyright 2026 The wptdock Authors
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

#include "wptdock/solver.hpp"
#include "wptdock/sweep.hpp"

namespace {

using namespace wptdock;

void BM_SolveSeries(benchmark::State& state) {
  ReceiverNetwork net = default_network(TopologyKind::kSeriesConnection);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_operating_point(net, 25.0));
  }
}
BENCHMARK(BM_SolveSeries);

void BM_SolveParallelWithDiodes(benchmark::State& state) {
  ReceiverNetwork net = default_network(TopologyKind::kParallelWithDiodes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_operating_point(net, 3.0));
  }
}
BENCHMARK(BM_SolveParallelWithDiodes);

void BM_DiodeOracle(benchmark::State& state) {
  ReceiverNetwork net = default_network(
      TopologyKind::kParallelWithDiodes, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(diode_state_oracle(net, 3.0));
  }
}
BENCHMARK(BM_DiodeOracle)->Arg(3)->Arg(6)->Arg(10);

void BM_RunSweep(benchmark::State& state) {
  ReceiverNetwork net = default_network(TopologyKind::kSeriesConnection);
  SweepConfig cfg = default_sweep_config(TopologyKind::kSeriesConnection);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(net, cfg));
  }
}
BENCHMARK(BM_RunSweep);

void BM_Calibrate(benchmark::State& state) {
  ModuleSpec base = default_module_spec();
  CalibrationTarget target;
  for (auto _ : state) {
    benchmark::DoNotOptimize(calibrate(target, base));
  }
}
BENCHMARK(BM_Calibrate);

}  // namespace

BENCHMARK_MAIN();
