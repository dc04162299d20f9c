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

#ifndef DPABC_CORE_INSTANCE_H_
#define DPABC_CORE_INSTANCE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dpabc/core/alternative_set.h"

namespace dpabc {

// An ordered list of approval ballots, one per voter.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Ballot> ballots) : ballots_(std::move(ballots)) {}

  int n() const { return static_cast<int>(ballots_.size()); }
  const Ballot& ballot(int voter) const { return ballots_[voter]; }
  const std::vector<Ballot>& ballots() const { return ballots_; }

  auto begin() const { return ballots_.begin(); }
  auto end() const { return ballots_.end(); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<Ballot> ballots_;
};

// A voting instance: a profile over m alternatives plus the committee size k.
//
// Invariants (checked by Create): m >= 3, m <= kMaxAlternatives,
// 1 <= k <= m, n >= 1, and every ballot is a non-empty subset of [0, m).
class Instance {
 public:
  static absl::StatusOr<Instance> Create(Profile profile, int m, int k);
  static absl::StatusOr<Instance> Create(std::vector<Ballot> ballots, int m,
                                         int k) {
    return Create(Profile(std::move(ballots)), m, k);
  }

  const Profile& profile() const { return profile_; }
  const Ballot& ballot(int voter) const { return profile_.ballot(voter); }
  int n() const { return profile_.n(); }
  int m() const { return m_; }
  int k() const { return k_; }
  AlternativeSet universe() const { return AlternativeSet::Universe(m_); }

  // The instance with voter's ballot replaced.
  absl::StatusOr<Instance> WithBallot(int voter, Ballot ballot) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance(Profile profile, int m, int k)
      : profile_(std::move(profile)), m_(m), k_(k) {}

  Profile profile_;
  int m_ = 0;
  int k_ = 0;
};

// Number of voters whose ballots differ. Fails on length mismatch.
absl::StatusOr<int> ProfileDistance(const Profile& a, const Profile& b);

// A bijection on [0, m): sigma[a] is the image of alternative a.
using Permutation = std::vector<int>;

absl::Status ValidatePermutation(absl::Span<const int> sigma, int m);

// Applies sigma elementwise. Assumes sigma is a valid permutation covering s.
AlternativeSet PermuteSet(AlternativeSet s, absl::Span<const int> sigma);
inline Committee PermuteCommittee(Committee c, absl::Span<const int> sigma) {
  return Committee(PermuteSet(c.members(), sigma));
}

// sigma . inst: every ballot mapped elementwise; n and k unchanged.
absl::StatusOr<Instance> Permute(const Instance& inst,
                                 absl::Span<const int> sigma);

// C(n, r) as a 64-bit integer; 0 when r is out of range.
int64_t Binomial(int n, int r);

// ceil(a / b) for positive integers.
constexpr int CeilDiv(int a, int b) { return (a + b - 1) / b; }

}  // namespace dpabc

#endif  // DPABC_CORE_INSTANCE_H_
