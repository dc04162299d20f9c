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

#ifndef DPABC_INSTANCES_WITNESS_H_
#define DPABC_INSTANCES_WITNESS_H_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/core/instance.h"

namespace dpabc {

// Instances on which an upper bound on approximate-axiom levels is forced.
// Each comes with its named committees; most also carry a companion profile
// that differs from the main one in a few voters.
enum class WitnessId {
  kJrUpper,         // theta <= eps. Neighbors; s = ceil(n/k).
  kPjrUpper,        // rho <= eps. Neighbors; n = s*k.
  kEjrUpper,        // kappa <= ceil(n/k) eps. Differ in s voters; n = s*k.
  kPeChain,         // beta <= eps/k. Pareto chain W_{p,q}; m >= n + 2k - 1.
  kCcUpper,         // eta <= eps. Neighbors; n = 2t + 1.
  kJrPjr3Way,       // theta + rho, theta + kappa. s = ceil(2n/k).
  kPjrEjr3Way,      // rho + kappa. Differ in s = ceil(n/k) voters.
  kFig3Divergence,  // k disjoint groups sharing k common alternatives.
  kCcJrIncompat,    // Condorcet committee leaves a 1-cohesive group unseated.
};

inline constexpr std::array<WitnessId, 9> kAllWitnesses = {
    WitnessId::kJrUpper,    WitnessId::kPjrUpper,   WitnessId::kEjrUpper,
    WitnessId::kPeChain,    WitnessId::kCcUpper,    WitnessId::kJrPjr3Way,
    WitnessId::kPjrEjr3Way, WitnessId::kFig3Divergence,
    WitnessId::kCcJrIncompat};

// "JR_UPPER", "PE_CHAIN", ...
absl::string_view WitnessName(WitnessId id);
// Case-insensitive; the error lists every valid id.
absl::StatusOr<WitnessId> ParseWitnessId(absl::string_view name);

struct WitnessParams {
  int n;
  int k;
  int m;
};

// Smallest parameters satisfying the construction's side conditions.
WitnessParams DefaultParams(WitnessId id);

// A named block of alternatives: symbol_1 .. symbol_count occupy indices
// first .. first + count - 1.
struct AliasBlock {
  std::string symbol;
  int first;
  int count;
};

struct WitnessInstance {
  WitnessId id;
  WitnessParams params;
  Instance instance;
  std::optional<Instance> companion;
  // Named committees in construction order, e.g. "W", "W_prime", "W_{1,2}".
  std::vector<std::pair<std::string, Committee>> tagged;
  std::vector<AliasBlock> aliases;
  // PE_CHAIN only: W_{1,1}, W_{1,2}, ..., W_{k,n}, W_{k+1,1}, each Pareto
  // dominating the next, with the overlap vectors the construction predicts.
  std::vector<Committee> chain;
  std::vector<std::vector<int>> chain_overlaps;

  // Committee tagged `name`, if any.
  std::optional<Committee> Tagged(absl::string_view name) const;
  // The instance followed by the companion, when present.
  std::vector<Instance> Family() const;
};

// Fails with InvalidArgument naming the violated side condition.
absl::StatusOr<WitnessInstance> MakeWitness(WitnessId id,
                                            const WitnessParams& params);
absl::StatusOr<WitnessInstance> MakeWitness(WitnessId id);

// Sidecar text listing aliases and tagged committees, one per line:
//   # witness JR_UPPER n=4 k=2 m=4
//   alias a 0 4
//   committee W 0 2
std::string FormatSidecar(const WitnessInstance& w);

}  // namespace dpabc

#endif  // DPABC_INSTANCES_WITNESS_H_
