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

#ifndef DPABC_AXIOMS_JUSTIFIED_REPRESENTATION_H_
#define DPABC_AXIOMS_JUSTIFIED_REPRESENTATION_H_

#include <optional>
#include <vector>

#include "dpabc/axioms/axiom.h"
#include "dpabc/axioms/cohesion.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"

namespace dpabc {

// Exact per-committee axiom checks against one instance. Construction
// precomputes the cohesive-group index; the checker is immutable afterwards.
//
// JR and EJR use maximal witnesses: a violation exists iff for some core T
// with |T| = ell, the voters approving T who have fewer than ell (JR: zero)
// members of W meet the ell-cohesion quota on their own.
//
// PJR: a violating ell-cohesive group V has |W ∩ ∪V| <= ell - 1, so its
// coverage of W lies in some U ⊆ W with |U| = ell - 1. Collecting every voter
// approving T whose ballot meets W inside U gives the largest such group, so
// a violation exists iff that collection meets the quota for some (T, U).
class AxiomChecker {
 public:
  explicit AxiomChecker(const Instance& inst);

  // JR, PJR, EJR: no violating cohesive group. PE: not Pareto-dominated by
  // any size-k committee. CC: w is the Condorcet committee, or none exists.
  // PE and CC rescan all committees on every call; use AxiomCommitteeSet for
  // whole-set queries.
  bool Satisfies(Committee w, Axiom ax) const;

  const Instance& instance() const { return inst_; }
  const CohesionIndex& cohesion() const { return index_; }

 private:
  bool SatisfiesJr(Committee w) const;
  bool SatisfiesPjr(Committee w) const;
  bool SatisfiesEjr(Committee w) const;

  Instance inst_;
  CohesionIndex index_;
};

// One-shot form of AxiomChecker::Satisfies.
bool SatisfiesAxiom(Committee w, const Instance& inst, Axiom ax);

// All committees satisfying ax, in canonical order. For the JR family,
// EJR(P,k) ⊆ PJR(P,k) ⊆ JR(P,k).
std::vector<Committee> AxiomCommitteeSet(const Instance& inst, Axiom ax);

}  // namespace dpabc

#endif  // DPABC_AXIOMS_JUSTIFIED_REPRESENTATION_H_
