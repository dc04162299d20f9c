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

#include "dpabc/audit/dp_audit.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpabc/core/enumerate.h"

namespace dpabc {

std::pair<double, size_t> MaxLogRatio(
    const CommitteeDistribution& dist,
    const CommitteeDistribution& neighbor_dist) {
  double best = -1;
  size_t arg = 0;
  for (size_t i = 0; i < dist.size(); ++i) {
    const double gap =
        std::abs(dist.log_probability(i) - neighbor_dist.log_probability(i));
    if (gap > best) {
      best = gap;
      arg = i;
    }
  }
  return {best, arg};
}

absl::StatusOr<DpAuditReport> DpLevel(const Mechanism& mech,
                                      const Instance& inst) {
  if (inst.m() > kDpAuditMaxAlternatives) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "DP audit enumerates n*(2^m-2) neighbors and is capped at m <= ",
        kDpAuditMaxAlternatives, "; got m=", inst.m()));
  }
  absl::StatusOr<CommitteeDistribution> base = ComputeDistribution(mech, inst);
  if (!base.ok()) return base.status();

  DpAuditReport report;
  absl::Status failure;
  ForEachNeighbor(inst, [&](const Neighbor& nb) {
    if (!failure.ok()) return;
    absl::StatusOr<CommitteeDistribution> other =
        ComputeDistribution(mech, nb.instance);
    if (!other.ok()) {
      failure = other.status();
      return;
    }
    ++report.instances_checked;
    const auto [gap, index] = MaxLogRatio(*base, *other);
    if (!report.committee.has_value() || gap > report.max_log_ratio) {
      report.max_log_ratio = gap;
      report.instance = inst;
      report.neighbor = nb.instance;
      report.neighbor_voter = nb.voter;
      report.committee = base->committee(index);
    }
  });
  if (!failure.ok()) return failure;
  return report;
}

absl::StatusOr<DpAuditReport> DpLevelOverFamily(
    const Mechanism& mech, absl::Span<const Instance> family) {
  DpAuditReport total;
  for (const Instance& inst : family) {
    absl::StatusOr<DpAuditReport> one = DpLevel(mech, inst);
    if (!one.ok()) return one.status();
    const int64_t checked = total.instances_checked + one->instances_checked;
    if (!total.committee.has_value() ||
        one->max_log_ratio > total.max_log_ratio) {
      total = *std::move(one);
    }
    total.instances_checked = checked;
  }
  return total;
}

}  // namespace dpabc
