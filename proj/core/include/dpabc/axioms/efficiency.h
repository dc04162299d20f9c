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

#ifndef DPABC_AXIOMS_EFFICIENCY_H_
#define DPABC_AXIOMS_EFFICIENCY_H_

#include <optional>
#include <vector>

#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"

namespace dpabc {

// (|W ∩ P_1|, ..., |W ∩ P_n|).
std::vector<int> OverlapVector(Committee w, const Profile& profile);

// Approval-voting score: sum over voters of |P_j ∩ W|.
int AvScore(Committee w, const Profile& profile);

// Per-alternative approval counts |{j : a ∈ P_j}| for a in [0, m).
std::vector<int> ApprovalCounts(const Instance& inst);

// True iff every voter has at least as many approved members in w1 as in w2
// and some voter has strictly more.
bool ParetoDominates(Committee w1, Committee w2, const Profile& profile);

// Committees of size k not Pareto-dominated by any other, canonical order.
std::vector<Committee> ParetoOptimalCommittees(const Instance& inst);

// True iff strictly more than n/2 voters approve more members of w1 than of
// w2. Exactly n/2 is not a majority.
bool BeatsByMajority(Committee w1, Committee w2, const Profile& profile);

// The committee beating every other committee by strict majority, if any.
// O(C(m,k)^2 * n).
std::optional<Committee> CondorcetCommittee(const Instance& inst);

}  // namespace dpabc

#endif  // DPABC_AXIOMS_EFFICIENCY_H_
