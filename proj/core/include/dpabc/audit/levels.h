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

#ifndef DPABC_AUDIT_LEVELS_H_
#define DPABC_AUDIT_LEVELS_H_

#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "dpabc/axioms/axiom.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"
#include "dpabc/mechanisms/distribution.h"
#include "dpabc/mechanisms/rational.h"

namespace dpabc {

inline constexpr double kInfiniteLevel = std::numeric_limits<double>::infinity();

// An approximate-axiom level in the log domain: the smallest
// log(p(W1) / p(W2)) over the constrained pairs. +inf when no pair exists.
struct AxiomLevel {
  double log_value = kInfiniteLevel;
  // log_value / epsilon, when the distribution carries exact weights.
  std::optional<Rational> epsilon_multiple;
  // (W1, W2) attaining the minimum; first in canonical order on ties.
  std::optional<std::pair<Committee, Committee>> attaining_pair;

  bool vacuous() const { return std::isinf(log_value) && log_value > 0; }
};

// min over W1 in S, W2 not in S of log p(W1) - log p(W2), where S is given
// by in_set (indexed like dist.committees()).
AxiomLevel BoundaryLevel(const CommitteeDistribution& dist,
                         const std::vector<bool>& in_set);

// theta / rho / kappa for JR / PJR / EJR: the boundary level of the axiom's
// committee set.
AxiomLevel JrFamilyLevel(const CommitteeDistribution& dist,
                         const Instance& inst, Axiom ax);

// beta: min over Pareto pairs (W1 dominates W2) of log p(W1) - log p(W2).
AxiomLevel PeLevel(const CommitteeDistribution& dist, const Instance& inst);

// eta: min over W != Wc of log p(Wc) - log p(W); +inf without a Condorcet
// committee.
AxiomLevel CcLevel(const CommitteeDistribution& dist, const Instance& inst);

// Dispatches on ax.
AxiomLevel MeasureAxiomLevel(const CommitteeDistribution& dist,
                             const Instance& inst, Axiom ax);

// The smaller of two levels, keeping its attaining pair. Ties keep a.
AxiomLevel MinLevel(const AxiomLevel& a, const AxiomLevel& b);

}  // namespace dpabc

#endif  // DPABC_AUDIT_LEVELS_H_
