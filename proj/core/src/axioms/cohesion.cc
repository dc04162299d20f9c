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

#include "dpabc/axioms/cohesion.h"

#include <algorithm>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpabc/core/enumerate.h"

namespace dpabc {
namespace {

// Every size-ell set commonly approved by at least one voter, in canonical
// order. Cores of cohesive groups must be drawn from these.
std::vector<AlternativeSet> CandidateCores(const std::vector<Ballot>& types,
                                           int ell) {
  absl::flat_hash_set<AlternativeSet> seen;
  std::vector<AlternativeSet> cores;
  for (const Ballot& b : types) {
    ForEachSubsetOfSize(b, ell, [&](AlternativeSet t) {
      if (seen.insert(t).second) cores.push_back(t);
    });
  }
  std::sort(cores.begin(), cores.end(), LexLess);
  return cores;
}

}  // namespace

CohesionIndex::CohesionIndex(const Instance& inst)
    : n_(inst.n()), k_(inst.k()), groups_(inst.k() + 1) {
  absl::flat_hash_map<Ballot, int> type_of;
  for (const Ballot& b : inst.profile()) {
    auto [it, inserted] = type_of.try_emplace(b, static_cast<int>(types_.size()));
    if (inserted) {
      types_.push_back(b);
      multiplicity_.push_back(0);
    }
    ++multiplicity_[it->second];
  }
  for (int ell = 1; ell <= k_; ++ell) {
    for (AlternativeSet core : CandidateCores(types_, ell)) {
      Group group{core, {}};
      int voters = 0;
      for (int t = 0; t < static_cast<int>(types_.size()); ++t) {
        if (core.IsSubsetOf(types_[t])) {
          group.types.push_back(t);
          voters += multiplicity_[t];
        }
      }
      if (MeetsCohesionQuota(voters, ell, n_, k_)) {
        groups_[ell].push_back(std::move(group));
      }
    }
  }
}

absl::StatusOr<std::vector<CohesiveWitness>> CohesiveWitnesses(
    const Instance& inst, int ell) {
  if (ell < 1 || ell > inst.k()) {
    return absl::InvalidArgumentError(
        absl::StrCat("ell=", ell, " outside [1, k=", inst.k(), "]"));
  }
  std::vector<CohesiveWitness> out;
  for (AlternativeSet core :
       CandidateCores(CohesionIndex(inst).ballot_types(), ell)) {
    CohesiveWitness w{ell, core, {}};
    for (int i = 0; i < inst.n(); ++i) {
      if (core.IsSubsetOf(inst.ballot(i))) w.voters.push_back(i);
    }
    if (MeetsCohesionQuota(static_cast<int>(w.voters.size()), ell, inst.n(),
                           inst.k())) {
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace dpabc
