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

#include "dpabc/axioms/efficiency.h"

#include <optional>
#include <vector>

#include "dpabc/core/enumerate.h"

namespace dpabc {
namespace {

// Overlap vectors of every committee, row-major by canonical committee order.
std::vector<std::vector<int>> AllOverlaps(const std::vector<Committee>& cs,
                                          const Profile& profile) {
  std::vector<std::vector<int>> out;
  out.reserve(cs.size());
  for (Committee c : cs) out.push_back(OverlapVector(c, profile));
  return out;
}

bool Dominates(const std::vector<int>& a, const std::vector<int>& b) {
  bool strict = false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

bool Beats(const std::vector<int>& a, const std::vector<int>& b) {
  int wins = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) ++wins;
  }
  return 2 * wins > static_cast<int>(a.size());
}

}  // namespace

std::vector<int> OverlapVector(Committee w, const Profile& profile) {
  std::vector<int> out;
  out.reserve(profile.n());
  for (const Ballot& b : profile) out.push_back((b & w.members()).size());
  return out;
}

int AvScore(Committee w, const Profile& profile) {
  int score = 0;
  for (const Ballot& b : profile) score += (b & w.members()).size();
  return score;
}

std::vector<int> ApprovalCounts(const Instance& inst) {
  std::vector<int> counts(inst.m(), 0);
  for (const Ballot& b : inst.profile()) {
    for (int a : b.members()) ++counts[a];
  }
  return counts;
}

bool ParetoDominates(Committee w1, Committee w2, const Profile& profile) {
  return Dominates(OverlapVector(w1, profile), OverlapVector(w2, profile));
}

std::vector<Committee> ParetoOptimalCommittees(const Instance& inst) {
  const std::vector<Committee> cs = *EnumerateCommittees(inst.m(), inst.k());
  const auto overlaps = AllOverlaps(cs, inst.profile());
  std::vector<Committee> out;
  for (size_t i = 0; i < cs.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cs.size() && !dominated; ++j) {
      dominated = Dominates(overlaps[j], overlaps[i]);
    }
    if (!dominated) out.push_back(cs[i]);
  }
  return out;
}

bool BeatsByMajority(Committee w1, Committee w2, const Profile& profile) {
  return Beats(OverlapVector(w1, profile), OverlapVector(w2, profile));
}

std::optional<Committee> CondorcetCommittee(const Instance& inst) {
  const std::vector<Committee> cs = *EnumerateCommittees(inst.m(), inst.k());
  const auto overlaps = AllOverlaps(cs, inst.profile());
  for (size_t i = 0; i < cs.size(); ++i) {
    bool beats_all = true;
    for (size_t j = 0; j < cs.size() && beats_all; ++j) {
      if (i != j) beats_all = Beats(overlaps[i], overlaps[j]);
    }
    // Two committees cannot both beat each other, so the first hit is unique.
    if (beats_all) return cs[i];
  }
  return std::nullopt;
}

}  // namespace dpabc
