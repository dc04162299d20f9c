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

#ifndef DPABC_AUDIT_TRADEOFF_H_
#define DPABC_AUDIT_TRADEOFF_H_

#include <cstdint>
#include <map>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dpabc/audit/bounds.h"
#include "dpabc/audit/levels.h"
#include "dpabc/axioms/axiom.h"
#include "dpabc/core/instance.h"
#include "dpabc/mechanisms/distribution.h"
#include "dpabc/mechanisms/mechanisms.h"

namespace dpabc {

using LevelMap = std::map<Axiom, AxiomLevel>;

// All five levels of mech, each the minimum over the instances in family.
// A level definition quantifies over every instance, so the value measured on
// a finite family is an upper estimate of the rule's true level; bounds
// derived from a pair of neighboring instances must be measured on a family
// holding both. All instances must share n and k.
absl::StatusOr<LevelMap> MeasureLevels(const Mechanism& mech,
                                       absl::Span<const Instance> family);

// Every bound in ids evaluated against levels.
absl::StatusOr<std::vector<BoundCheck>> CheckBounds(
    absl::Span<const BoundId> ids, const LevelMap& levels, int n, int k,
    double epsilon);

// Lower bounds on the probability that a rule with level theta (linear
// domain, theta >= 1) outputs a JR committee.
struct JrProbabilityBounds {
  // theta * t / (theta * t + C(m,k) - t), t = |JR(P,k)|.
  double instance_bound;
  // theta / (theta + C(m,k) - 1): the worst case t = 1.
  double instance_free_bound;
};
absl::StatusOr<JrProbabilityBounds> JrProbabilityBound(double theta,
                                                       int64_t jr_count, int m,
                                                       int k);

// Total probability of the committees satisfying ax.
double AxiomMass(const CommitteeDistribution& dist, const Instance& inst,
                 Axiom ax);

// max_W log p(W) - min_W log p(W). For a neutral epsilon-DP rule this never
// exceeds n * epsilon.
double LogProbabilitySpread(const CommitteeDistribution& dist);

}  // namespace dpabc

#endif  // DPABC_AUDIT_TRADEOFF_H_
