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

#ifndef DPABC_AUDIT_DP_AUDIT_H_
#define DPABC_AUDIT_DP_AUDIT_H_

#include <cstdint>
#include <optional>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"
#include "dpabc/mechanisms/distribution.h"
#include "dpabc/mechanisms/mechanisms.h"

namespace dpabc {

// Exhausting n * (2^m - 2) neighbors is only attempted up to this m.
inline constexpr int kDpAuditMaxAlternatives = 8;

// Worst observed |log p(W | P) - log p(W | P')| over neighbors P' of the
// audited instances. Symmetric in (P, P') by construction.
struct DpAuditReport {
  double max_log_ratio = 0;
  // Attaining triple: audited instance, its neighbor, the committee. Unset
  // only when no neighbor exists.
  std::optional<Instance> instance;
  std::optional<Instance> neighbor;
  int neighbor_voter = -1;
  std::optional<Committee> committee;
  int64_t instances_checked = 0;  // neighbors evaluated
};

// Largest log-probability gap between dist (the law on some instance) and
// neighbor_dist, with the committee attaining it.
std::pair<double, size_t> MaxLogRatio(const CommitteeDistribution& dist,
                                      const CommitteeDistribution& neighbor_dist);

// Audits one instance's full neighborhood. Fails with ResourceExhausted when
// m exceeds kDpAuditMaxAlternatives.
absl::StatusOr<DpAuditReport> DpLevel(const Mechanism& mech,
                                      const Instance& inst);

// Max of DpLevel over a caller-supplied list of instances.
absl::StatusOr<DpAuditReport> DpLevelOverFamily(
    const Mechanism& mech, absl::Span<const Instance> family);

}  // namespace dpabc

#endif  // DPABC_AUDIT_DP_AUDIT_H_
