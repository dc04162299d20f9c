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

#ifndef DPABC_MECHANISMS_SEQUENTIAL_AV_H_
#define DPABC_MECHANISMS_SEQUENTIAL_AV_H_

#include "absl/status/statusor.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"
#include "dpabc/core/random.h"
#include "dpabc/mechanisms/distribution.h"

namespace dpabc {

// Sequential AV sampler: k rounds, each picking one remaining alternative a
// with probability proportional to e^{chi(a) * epsilon / (2k)}, where chi(a)
// is a's approval count.
//
// Drawing without replacement does not give weight proportional to
// e^{AV(W) * epsilon / (2k)} for k >= 2: the denominators shrink by the
// weights already drawn, and the order in which W is drawn matters. This
// computes the sampler's true committee law. The probability that the first
// |S| picks form the set S obeys
//   f(S) = sum_{a in S} f(S - a) * w(a) / w(A - (S - a)),
// evaluated in the log domain over all subsets of size <= k.
inline constexpr int kSequentialAvMaxAlternatives = 16;

absl::StatusOr<CommitteeDistribution> SequentialAvDistribution(
    const Instance& inst, double epsilon);

// Runs the k rounds literally. Each round consumes one Rng::NextDouble and
// scans the remaining alternatives in index order.
absl::StatusOr<Committee> SampleSequentialAv(const Instance& inst,
                                             double epsilon, RandomSeed seed);

}  // namespace dpabc

#endif  // DPABC_MECHANISMS_SEQUENTIAL_AV_H_
