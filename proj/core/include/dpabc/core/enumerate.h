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

#ifndef DPABC_CORE_ENUMERATE_H_
#define DPABC_CORE_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"

namespace dpabc {

// Calls fn(subset) for every size-r subset of `ground`, in lexicographic
// order of ascending member lists. r == 0 yields the empty set once.
void ForEachSubsetOfSize(AlternativeSet ground, int r,
                         const std::function<void(AlternativeSet)>& fn);

// All C(m, k) committees over [0, m) in canonical (lexicographic) order. This
// ordering indexes every distribution, sampler and report.
absl::StatusOr<std::vector<Committee>> EnumerateCommittees(int m, int k);

// One neighboring instance: `voter`'s ballot replaced by `replacement`.
struct Neighbor {
  int voter;
  Ballot replacement;
  const Instance& instance;
};

// Visits every instance obtained by replacing exactly one voter's ballot with
// a different non-empty subset of [0, m). There are n * (2^m - 2) of them.
// Voters are visited in order; replacements in increasing mask order. The
// Instance passed to fn is only valid for the duration of the call.
void ForEachNeighbor(const Instance& inst,
                     const std::function<void(const Neighbor&)>& fn);

// Materialized form of ForEachNeighbor, for small instances.
struct NeighborInstance {
  int voter;
  Instance instance;
};
std::vector<NeighborInstance> EnumerateNeighbors(const Instance& inst);

int64_t NeighborCount(const Instance& inst);

}  // namespace dpabc

#endif  // DPABC_CORE_ENUMERATE_H_
