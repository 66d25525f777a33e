// Copyright 2026 The Walshpulse Authors
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

#include <numbers>

#include "walshpulse/compiler.h"
#include "walshpulse/executor.h"

namespace {

using namespace walshpulse;

void BM_RunIsingSchedule(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto resource = ResourceHamiltonian::power_law_chain(n, 3);
    auto schedule = compile(ising_chain_target(n), resource);
    auto plan = plan_cycles(schedule, std::numbers::pi / 4, tau_from_interval(schedule, 1e-2));
    for (auto _ : state) {
        auto psi = run_schedule(schedule, resource, plan.tau, plan.cycles, {}, StateVector(n));
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
}
BENCHMARK(BM_RunIsingSchedule)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
