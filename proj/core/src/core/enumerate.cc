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

#include "dpabc/core/enumerate.h"

#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dpabc {

void ForEachSubsetOfSize(AlternativeSet ground, int r,
                         const std::function<void(AlternativeSet)>& fn) {
  const std::vector<int> items = ground.members();
  const int size = static_cast<int>(items.size());
  if (r < 0 || r > size) return;
  // positions[0] < positions[1] < ... indexes into items; advancing the
  // rightmost movable position yields lexicographic order.
  std::vector<int> positions(r);
  for (int i = 0; i < r; ++i) positions[i] = i;
  while (true) {
    uint64_t bits = 0;
    for (int p : positions) bits |= uint64_t{1} << items[p];
    fn(AlternativeSet::FromBits(bits));
    int i = r - 1;
    while (i >= 0 && positions[i] == size - r + i) --i;
    if (i < 0) return;
    ++positions[i];
    for (int j = i + 1; j < r; ++j) positions[j] = positions[j - 1] + 1;
  }
}

absl::StatusOr<std::vector<Committee>> EnumerateCommittees(int m, int k) {
  if (m < 1 || m > kMaxAlternatives) {
    return absl::InvalidArgumentError(
        absl::StrCat("m must lie in [1, ", kMaxAlternatives, "], got ", m));
  }
  if (k < 1 || k > m) {
    return absl::InvalidArgumentError(
        absl::StrCat("committee size k=", k, " outside [1, m=", m, "]"));
  }
  std::vector<Committee> out;
  out.reserve(Binomial(m, k));
  ForEachSubsetOfSize(AlternativeSet::Universe(m), k,
                      [&](AlternativeSet s) { out.emplace_back(s); });
  return out;
}

void ForEachNeighbor(const Instance& inst,
                     const std::function<void(const Neighbor&)>& fn) {
  const uint64_t full = inst.universe().bits();
  for (int voter = 0; voter < inst.n(); ++voter) {
    const uint64_t current = inst.ballot(voter).bits();
    for (uint64_t mask = 1; mask <= full; ++mask) {
      if (mask == current) continue;
      const Ballot replacement = Ballot::FromBits(mask);
      // Replacement is non-empty and inside the universe, so this succeeds.
      const Instance neighbor = *inst.WithBallot(voter, replacement);
      fn(Neighbor{voter, replacement, neighbor});
    }
  }
}

std::vector<NeighborInstance> EnumerateNeighbors(const Instance& inst) {
  std::vector<NeighborInstance> out;
  out.reserve(NeighborCount(inst));
  ForEachNeighbor(inst, [&](const Neighbor& nb) {
    out.push_back(NeighborInstance{nb.voter, nb.instance});
  });
  return out;
}

int64_t NeighborCount(const Instance& inst) {
  return static_cast<int64_t>(inst.n()) *
         ((int64_t{1} << inst.m()) - 2);
}

}  // namespace dpabc
