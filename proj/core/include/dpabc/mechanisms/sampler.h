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

#ifndef DPABC_MECHANISMS_SAMPLER_H_
#define DPABC_MECHANISMS_SAMPLER_H_

#include "dpabc/core/alternative_set.h"
#include "dpabc/core/random.h"
#include "dpabc/mechanisms/distribution.h"

namespace dpabc {

// Inverse-CDF draw over the canonical committee order, consuming one
// Rng(seed).NextDouble(). Same (dist, seed) always yields the same committee.
Committee Sample(const CommitteeDistribution& dist, RandomSeed seed);

// Inverse-CDF lookup for a given u in [0, 1).
Committee SampleAt(const CommitteeDistribution& dist, double u);

}  // namespace dpabc

#endif  // DPABC_MECHANISMS_SAMPLER_H_
