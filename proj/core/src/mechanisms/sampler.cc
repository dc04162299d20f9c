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

#include "dpabc/mechanisms/sampler.h"

#include "dpabc/core/random.h"

namespace dpabc {

Committee SampleAt(const CommitteeDistribution& dist, double u) {
  double cumulative = 0;
  for (size_t i = 0; i < dist.size(); ++i) {
    cumulative += dist.probability(i);
    if (u < cumulative) return dist.committee(i);
  }
  // Rounding left u above the final partial sum.
  return dist.committee(dist.size() - 1);
}

Committee Sample(const CommitteeDistribution& dist, RandomSeed seed) {
  Rng rng(seed);
  return SampleAt(dist, rng.NextDouble());
}

}  // namespace dpabc
