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

#include "dpabc/audit/witness_audit.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dpabc {

std::optional<WitnessId> ForcingWitness(BoundId id) {
  switch (id) {
    case BoundId::kJr:
      return WitnessId::kJrUpper;
    case BoundId::kPjr:
      return WitnessId::kPjrUpper;
    case BoundId::kEjr:
      return WitnessId::kEjrUpper;
    case BoundId::kPe:
    case BoundId::kPeJr:
    case BoundId::kPePjr:
    case BoundId::kPeEjr:
    case BoundId::kPeCc:
      return WitnessId::kPeChain;
    case BoundId::kCc:
      return WitnessId::kCcUpper;
    case BoundId::kJrPjr:
    case BoundId::kJrEjr:
      return std::nullopt;
    case BoundId::kPjrEjr:
      return WitnessId::kPjrEjr3Way;
    case BoundId::kCcJr:
      return WitnessId::kCcJrIncompat;
  }
  return std::nullopt;
}

AuditFamily SharedParameterFamily(const WitnessParams& params) {
  AuditFamily family{params, {}, {}};
  for (WitnessId id : kAllWitnesses) {
    absl::StatusOr<WitnessInstance> w = MakeWitness(id, params);
    if (!w.ok()) continue;
    family.members.push_back(id);
    for (Instance& inst : w->Family()) family.instances.push_back(std::move(inst));
  }
  return family;
}

absl::StatusOr<AuditFamily> WitnessAuditFamily(WitnessId id,
                                               const WitnessParams& params) {
  if (absl::StatusOr<WitnessInstance> w = MakeWitness(id, params); !w.ok()) {
    return w.status();
  }
  return SharedParameterFamily(params);
}

absl::StatusOr<FamilyBoundReport> AuditFamilyBounds(
    const Mechanism& mech, const AuditFamily& family,
    absl::Span<const BoundId> ids) {
  absl::StatusOr<LevelMap> levels = MeasureLevels(mech, family.instances);
  if (!levels.ok()) return levels.status();
  absl::StatusOr<std::vector<BoundCheck>> checks = CheckBounds(
      ids, *levels, family.params.n, family.params.k, mech.epsilon);
  if (!checks.ok()) return checks.status();
  for (BoundCheck& c : *checks) {
    const std::optional<WitnessId> forcing = ForcingWitness(c.id);
    c.forced = forcing.has_value() &&
               std::find(family.members.begin(), family.members.end(),
                         *forcing) != family.members.end();
    if (!c.forced && !c.satisfied) {
      c.note = absl::StrCat(c.note.empty() ? "" : c.note + "; ",
                            "exceeds bound on a family that does not force it");
    }
  }
  return FamilyBoundReport{*std::move(levels), *std::move(checks)};
}

}  // namespace dpabc
