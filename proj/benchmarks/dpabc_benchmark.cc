//
// Copyright 2026 The dpabc Authors
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
//

#include <cstdint>

#include "benchmark/benchmark.h"
#include "dpabc/audit/dp_audit.h"
#include "dpabc/axioms/axiom.h"
#include "dpabc/axioms/justified_representation.h"
#include "dpabc/core/enumerate.h"
#include "dpabc/core/random.h"
#include "dpabc/instances/random_instance.h"
#include "dpabc/mechanisms/mechanisms.h"

namespace dpabc {
namespace {

Instance Random(int m, int n, int k) {
  return *RandomInstance(m, n, k, BallotModel::Impartial(0.3), RandomSeed{42});
}

void BM_EnumerateCommittees(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int k = m / 2;
  for (auto _ : state) {
    auto all = EnumerateCommittees(m, k);
    benchmark::DoNotOptimize(all->data());
  }
  state.SetItemsProcessed(state.iterations() * Binomial(m, k));
}
BENCHMARK(BM_EnumerateCommittees)->DenseRange(8, 20, 4);

void BM_PjrCommitteeSet(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance inst = Random(m, 12, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AxiomCommitteeSet(inst, Axiom::kPJR).size());
  }
}
BENCHMARK(BM_PjrCommitteeSet)->DenseRange(6, 12, 2);

void BM_DpAudit(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Instance inst = Random(m, 4, 2);
  const Mechanism mech{MechanismKind::kExpAv, 1.0};
  int64_t neighbors = 0;
  for (auto _ : state) {
    auto report = DpLevel(mech, inst);
    neighbors = report->instances_checked;
    benchmark::DoNotOptimize(report->max_log_ratio);
  }
  state.SetItemsProcessed(state.iterations() * neighbors);
}
BENCHMARK(BM_DpAudit)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dpabc

BENCHMARK_MAIN();
