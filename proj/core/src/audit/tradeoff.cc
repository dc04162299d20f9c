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

#include "dpabc/audit/tradeoff.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpabc/axioms/justified_representation.h"

namespace dpabc {

absl::StatusOr<LevelMap> MeasureLevels(const Mechanism& mech,
                                       absl::Span<const Instance> family) {
  if (family.empty()) {
    return absl::InvalidArgumentError("empty instance family");
  }
  LevelMap levels;
  for (Axiom ax : kAllAxioms) levels[ax] = AxiomLevel{};
  for (const Instance& inst : family) {
    if (inst.n() != family[0].n() || inst.k() != family[0].k()) {
      return absl::InvalidArgumentError(
          "family instances must share n and k");
    }
    absl::StatusOr<CommitteeDistribution> dist = ComputeDistribution(mech, inst);
    if (!dist.ok()) return dist.status();
    for (Axiom ax : kAllAxioms) {
      levels[ax] = MinLevel(levels[ax], MeasureAxiomLevel(*dist, inst, ax));
    }
  }
  return levels;
}

absl::StatusOr<std::vector<BoundCheck>> CheckBounds(
    absl::Span<const BoundId> ids, const LevelMap& levels, int n, int k,
    double epsilon) {
  std::vector<BoundCheck> out;
  for (BoundId id : ids) {
    absl::StatusOr<BoundCheck> check = CheckBound(id, levels, n, k, epsilon);
    if (!check.ok()) return check.status();
    out.push_back(*std::move(check));
  }
  return out;
}

absl::StatusOr<JrProbabilityBounds> JrProbabilityBound(double theta,
                                                       int64_t jr_count, int m,
                                                       int k) {
  const int64_t total = Binomial(m, k);
  if (total <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("no committees for m=", m, ", k=", k));
  }
  if (jr_count < 1 || jr_count > total) {
    return absl::InvalidArgumentError(absl::StrCat(
        "jr_count=", jr_count, " outside [1, C(m,k)=", total, "]"));
  }
  if (!(theta > 0) || !std::isfinite(theta)) {
    return absl::InvalidArgumentError("theta must be positive and finite");
  }
  const double t = static_cast<double>(jr_count);
  const double c = static_cast<double>(total);
  return JrProbabilityBounds{theta * t / (theta * t + c - t),
                             theta / (theta + c - 1)};
}

double AxiomMass(const CommitteeDistribution& dist, const Instance& inst,
                 Axiom ax) {
  double mass = 0;
  for (Committee c : AxiomCommitteeSet(inst, ax)) mass += dist.ProbabilityOf(c);
  return mass;
}

double LogProbabilitySpread(const CommitteeDistribution& dist) {
  double lo = dist.log_probability(0);
  double hi = lo;
  for (size_t i = 1; i < dist.size(); ++i) {
    lo = std::min(lo, dist.log_probability(i));
    hi = std::max(hi, dist.log_probability(i));
  }
  return hi - lo;
}

}  // namespace dpabc
