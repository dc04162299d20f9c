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

#include "dpabc/audit/levels.h"

#include <optional>
#include <vector>

#include "dpabc/axioms/efficiency.h"
#include "dpabc/axioms/justified_representation.h"

namespace dpabc {
namespace {

// Level of a single pair (i over j).
AxiomLevel PairLevel(const CommitteeDistribution& dist, size_t i, size_t j) {
  AxiomLevel level;
  level.log_value = dist.log_probability(i) - dist.log_probability(j);
  if (dist.is_exact()) {
    const Rational diff = dist.q(i) - dist.q(j);
    level.epsilon_multiple = diff;
    level.log_value = RationalToDouble(diff) * dist.epsilon();
  }
  level.attaining_pair.emplace(dist.committee(i), dist.committee(j));
  return level;
}

bool Below(const CommitteeDistribution& dist, size_t i1, size_t j1, size_t i2,
           size_t j2) {
  if (dist.is_exact()) {
    return dist.q(i1) - dist.q(j1) < dist.q(i2) - dist.q(j2);
  }
  return dist.log_probability(i1) - dist.log_probability(j1) <
         dist.log_probability(i2) - dist.log_probability(j2);
}

}  // namespace

AxiomLevel BoundaryLevel(const CommitteeDistribution& dist,
                         const std::vector<bool>& in_set) {
  // The minimum splits into the lightest member and the heaviest non-member.
  std::optional<size_t> lightest;
  std::optional<size_t> heaviest;
  for (size_t i = 0; i < dist.size(); ++i) {
    if (in_set[i]) {
      if (!lightest.has_value() || Below(dist, i, 0, *lightest, 0)) lightest = i;
    } else {
      if (!heaviest.has_value() || Below(dist, *heaviest, 0, i, 0)) heaviest = i;
    }
  }
  if (!lightest.has_value() || !heaviest.has_value()) return AxiomLevel{};
  return PairLevel(dist, *lightest, *heaviest);
}

AxiomLevel JrFamilyLevel(const CommitteeDistribution& dist,
                         const Instance& inst, Axiom ax) {
  const AxiomChecker checker(inst);
  std::vector<bool> in_set(dist.size());
  for (size_t i = 0; i < dist.size(); ++i) {
    in_set[i] = checker.Satisfies(dist.committee(i), ax);
  }
  return BoundaryLevel(dist, in_set);
}

AxiomLevel PeLevel(const CommitteeDistribution& dist, const Instance& inst) {
  std::vector<std::vector<int>> overlaps;
  overlaps.reserve(dist.size());
  for (const Committee& c : dist.committees()) {
    overlaps.push_back(OverlapVector(c, inst.profile()));
  }
  std::optional<std::pair<size_t, size_t>> best;
  for (size_t i = 0; i < dist.size(); ++i) {
    for (size_t j = 0; j < dist.size(); ++j) {
      bool strict = false;
      bool weak = true;
      for (size_t v = 0; v < overlaps[i].size() && weak; ++v) {
        if (overlaps[i][v] < overlaps[j][v]) weak = false;
        if (overlaps[i][v] > overlaps[j][v]) strict = true;
      }
      if (!weak || !strict) continue;
      if (!best.has_value() || Below(dist, i, j, best->first, best->second)) {
        best.emplace(i, j);
      }
    }
  }
  if (!best.has_value()) return AxiomLevel{};
  return PairLevel(dist, best->first, best->second);
}

AxiomLevel CcLevel(const CommitteeDistribution& dist, const Instance& inst) {
  const std::optional<Committee> wc = CondorcetCommittee(inst);
  if (!wc.has_value()) return AxiomLevel{};
  std::vector<bool> in_set(dist.size());
  for (size_t i = 0; i < dist.size(); ++i) in_set[i] = dist.committee(i) == *wc;
  return BoundaryLevel(dist, in_set);
}

AxiomLevel MeasureAxiomLevel(const CommitteeDistribution& dist,
                             const Instance& inst, Axiom ax) {
  switch (ax) {
    case Axiom::kPE:
      return PeLevel(dist, inst);
    case Axiom::kCC:
      return CcLevel(dist, inst);
    default:
      return JrFamilyLevel(dist, inst, ax);
  }
}

AxiomLevel MinLevel(const AxiomLevel& a, const AxiomLevel& b) {
  if (b.vacuous()) return a;
  if (a.vacuous()) return b;
  if (a.epsilon_multiple.has_value() && b.epsilon_multiple.has_value()) {
    return *b.epsilon_multiple < *a.epsilon_multiple ? b : a;
  }
  return b.log_value < a.log_value ? b : a;
}

}  // namespace dpabc
