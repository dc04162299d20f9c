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

#ifndef DPABC_AXIOMS_COHESION_H_
#define DPABC_AXIOMS_COHESION_H_

#include <vector>

#include "absl/status/statusor.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"

namespace dpabc {

// A maximal ell-cohesive group: all voters approving every alternative in
// `core` (|core| == ell), kept only when k * |voters| >= ell * n.
struct CohesiveWitness {
  int ell = 0;
  AlternativeSet core;
  std::vector<int> voters;  // ascending
};

// Maximal witnesses for one ell, ordered by `core` lexicographically.
// Every ell-cohesive group is contained in one of these (take any size-ell
// subset of its common approvals as the core). Fails unless 1 <= ell <= k.
absl::StatusOr<std::vector<CohesiveWitness>> CohesiveWitnesses(
    const Instance& inst, int ell);

// True iff k * voters >= ell * n, evaluated in integers.
constexpr bool MeetsCohesionQuota(int voters, int ell, int n, int k) {
  return static_cast<long long>(k) * voters >=
         static_cast<long long>(ell) * n;
}

// Per-instance index used by the JR-family checkers. Voters are grouped by
// distinct ballot, so checks cost O(#distinct ballots) per candidate group
// rather than O(n).
class CohesionIndex {
 public:
  struct Group {
    AlternativeSet core;
    std::vector<int> types;  // indices into ballot_types()
  };

  explicit CohesionIndex(const Instance& inst);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Ballot>& ballot_types() const { return types_; }
  const std::vector<int>& multiplicity() const { return multiplicity_; }
  // Groups with |core| == ell meeting the ell-cohesion quota; ell in [1, k].
  const std::vector<Group>& groups(int ell) const { return groups_[ell]; }

 private:
  int n_;
  int k_;
  std::vector<Ballot> types_;
  std::vector<int> multiplicity_;
  std::vector<std::vector<Group>> groups_;  // indexed by ell, [0] unused
};

}  // namespace dpabc

#endif  // DPABC_AXIOMS_COHESION_H_
