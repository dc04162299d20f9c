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

#ifndef DPABC_AUDIT_WITNESS_AUDIT_H_
#define DPABC_AUDIT_WITNESS_AUDIT_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dpabc/audit/bounds.h"
#include "dpabc/audit/tradeoff.h"
#include "dpabc/core/instance.h"
#include "dpabc/instances/witness.h"
#include "dpabc/mechanisms/mechanisms.h"

namespace dpabc {

// The witness whose instances force a bound for every epsilon-DP rule (and,
// for the PE bounds, every neutral one). None for theta + rho and
// theta + kappa: the JR_PJR_3WAY profiles have identical JR sets, so no chain
// of level steps through them crosses the JR boundary.
std::optional<WitnessId> ForcingWitness(BoundId id);

// Every witness constructible at one (n, k, m), over the same alternatives.
struct AuditFamily {
  WitnessParams params;
  std::vector<WitnessId> members;
  std::vector<Instance> instances;  // each member's Family(), in order
};
AuditFamily SharedParameterFamily(const WitnessParams& params);

// The shared-parameter family of one witness at the given parameters. Fails
// when the witness itself is not constructible there.
absl::StatusOr<AuditFamily> WitnessAuditFamily(WitnessId id,
                                               const WitnessParams& params);

struct FamilyBoundReport {
  LevelMap levels;
  std::vector<BoundCheck> checks;  // forced flags filled in
};

// Measures mech's levels over family and checks ids against them.
absl::StatusOr<FamilyBoundReport> AuditFamilyBounds(
    const Mechanism& mech, const AuditFamily& family,
    absl::Span<const BoundId> ids);

}  // namespace dpabc

#endif  // DPABC_AUDIT_WITNESS_AUDIT_H_
