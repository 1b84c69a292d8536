// Copyright 2026 The rspin Authors
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

#include "rspin/csv.h"
#include "rspin/entanglement.h"
#include "rspin/linalg.h"
#include "rspin/model.h"
#include "rspin/montecarlo.h"
#include "rspin/nearest_w.h"
#include "rspin/rmt.h"

namespace {

using namespace rspin;

void BM_HermitianEig(benchmark::State &state) {
    int dim = static_cast<int>(state.range(0));
    RngStream rng(1, 0);
    HermitianMatrix h = sample_gue({dim, 1.0}, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(h));
    }
}
BENCHMARK(BM_HermitianEig)->Arg(2)->Arg(4)->Arg(8);

void BM_SampleGue8(benchmark::State &state) {
    RngStream rng(2, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_gue({8, 1.0}, rng));
    }
}
BENCHMARK(BM_SampleGue8);

void BM_ConcurrenceMixed(benchmark::State &state) {
    RngStream rng(3, 0);
    HermitianMatrix rho = partial_trace(sample_haar_state(8, rng), {1, 2}, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(concurrence_mixed(rho));
    }
}
BENCHMARK(BM_ConcurrenceMixed);

void BM_EntanglementReport(benchmark::State &state) {
    RngStream rng(4, 0);
    PureState s = sample_haar_state(8, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(entanglement_report(s));
    }
}
BENCHMARK(BM_EntanglementReport);

void BM_TangleHyperdet(benchmark::State &state) {
    RngStream rng(5, 0);
    PureState s = sample_haar_state(8, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tangle_hyperdet(s));
    }
}
BENCHMARK(BM_TangleHyperdet);

// One full Monte Carlo sample: Hamiltonian, ground state, all measures.
void BM_SampleAndReport(benchmark::State &state) {
    auto kind = static_cast<InteractionKind>(state.range(0));
    uint64_t k = 0;
    for (auto _ : state) {
        RngStream rng = derive_stream(6, k++);
        GroundState gs = ground_state(build_hamiltonian({kind, 1.0}, rng));
        if (n_qubits(kind) == 2) {
            benchmark::DoNotOptimize(concurrence_pure2(gs.state));
        } else {
            benchmark::DoNotOptimize(entanglement_report(gs.state));
        }
    }
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_SampleAndReport)
    ->Arg(static_cast<int>(InteractionKind::TwoQubitJoint))
    ->Arg(static_cast<int>(InteractionKind::CollectiveIII))
    ->Arg(static_cast<int>(InteractionKind::PairwiseC));

void BM_NearestW(benchmark::State &state) {
    uint64_t k = 0;
    for (auto _ : state) {
        RngStream rng = derive_stream(7, k++);
        GroundState gs = ground_state(build_hamiltonian({InteractionKind::PairwiseC, 0.5}, rng));
        benchmark::DoNotOptimize(nearest_zero_tangle(gs.state, {}, rng));
    }
}
BENCHMARK(BM_NearestW)->Unit(benchmark::kMillisecond)->Iterations(20);

void BM_Sweep(benchmark::State &state) {
    SweepConfig c;
    c.kind = InteractionKind::PairwiseC;
    c.sigma_grid = {0.1, 1.0, 10.0};
    c.n_samples = 1000;
    c.master_seed = 8;
    c.quantities = {Quantity::Tangle, Quantity::TotalConcurrence};
    c.worker_count_hint = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(c));
    }
    state.SetItemsProcessed(state.iterations() * 3000);
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FormatCsv(benchmark::State &state) {
    SweepResult r = haar_reference(3, 100, 9);
    r.rows.resize(1000, r.rows[0]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(format_csv(r));
    }
}
BENCHMARK(BM_FormatCsv);

}  // namespace

BENCHMARK_MAIN();
