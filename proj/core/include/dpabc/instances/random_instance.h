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

#ifndef DPABC_INSTANCES_RANDOM_INSTANCE_H_
#define DPABC_INSTANCES_RANDOM_INSTANCE_H_

#include "absl/status/statusor.h"
#include "dpabc/core/instance.h"
#include "dpabc/core/random.h"

namespace dpabc {

// How random ballots are drawn.
//   kImpartial: each alternative approved independently with probability p;
//     empty ballots are redrawn.
//   kDisjointGroups: alternatives are shuffled into `groups` non-empty blocks
//     and each voter joins a uniformly random group, approving its block.
struct BallotModel {
  enum class Kind { kImpartial, kDisjointGroups };

  Kind kind = Kind::kImpartial;
  double p = 0.5;
  int groups = 2;

  static BallotModel Impartial(double p) { return {Kind::kImpartial, p, 0}; }
  static BallotModel DisjointGroups(int groups) {
    return {Kind::kDisjointGroups, 0, groups};
  }
};

// Deterministic in (m, n, k, model, seed). Fails on invalid model parameters
// (p outside (0, 1], groups outside [1, m]) or invalid instance sizes.
absl::StatusOr<Instance> RandomInstance(int m, int n, int k,
                                        const BallotModel& model,
                                        RandomSeed seed);

}  // namespace dpabc

#endif  // DPABC_INSTANCES_RANDOM_INSTANCE_H_
