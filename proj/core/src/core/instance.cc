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

#include "dpabc/core/instance.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dpabc {

absl::StatusOr<Instance> Instance::Create(Profile profile, int m, int k) {
  if (m < 3 || m > kMaxAlternatives) {
    return absl::InvalidArgumentError(
        absl::StrCat("m must lie in [3, ", kMaxAlternatives, "], got ", m));
  }
  if (k < 1 || k > m) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must lie in [1, m=", m, "], got ", k));
  }
  if (profile.n() < 1) {
    return absl::InvalidArgumentError("profile must contain at least one voter");
  }
  const AlternativeSet universe = AlternativeSet::Universe(m);
  for (int i = 0; i < profile.n(); ++i) {
    const Ballot& b = profile.ballot(i);
    if (b.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("ballot of voter ", i, " is empty"));
    }
    if (!b.IsSubsetOf(universe)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "ballot of voter ", i, " ", b.ToString(), " exceeds m=", m));
    }
  }
  return Instance(std::move(profile), m, k);
}

absl::StatusOr<Instance> Instance::WithBallot(int voter, Ballot ballot) const {
  if (voter < 0 || voter >= n()) {
    return absl::InvalidArgumentError(absl::StrCat("no voter ", voter));
  }
  if (ballot.empty() || !ballot.IsSubsetOf(universe())) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid replacement ballot ", ballot.ToString()));
  }
  std::vector<Ballot> ballots = profile_.ballots();
  ballots[voter] = ballot;
  return Instance(Profile(std::move(ballots)), m_, k_);
}

absl::StatusOr<int> ProfileDistance(const Profile& a, const Profile& b) {
  if (a.n() != b.n()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "profiles have different lengths ", a.n(), " and ", b.n()));
  }
  int distance = 0;
  for (int i = 0; i < a.n(); ++i) {
    if (!(a.ballot(i) == b.ballot(i))) ++distance;
  }
  return distance;
}

absl::Status ValidatePermutation(absl::Span<const int> sigma, int m) {
  if (static_cast<int>(sigma.size()) != m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "permutation has ", sigma.size(), " entries, expected ", m));
  }
  uint64_t seen = 0;
  for (int image : sigma) {
    if (image < 0 || image >= m || ((seen >> image) & 1u)) {
      return absl::InvalidArgumentError("sigma is not a bijection on [0, m)");
    }
    seen |= uint64_t{1} << image;
  }
  return absl::OkStatus();
}

AlternativeSet PermuteSet(AlternativeSet s, absl::Span<const int> sigma) {
  uint64_t bits = 0;
  for (uint64_t rest = s.bits(); rest != 0; rest &= rest - 1) {
    bits |= uint64_t{1} << sigma[std::countr_zero(rest)];
  }
  return AlternativeSet::FromBits(bits);
}

absl::StatusOr<Instance> Permute(const Instance& inst,
                                 absl::Span<const int> sigma) {
  if (absl::Status s = ValidatePermutation(sigma, inst.m()); !s.ok()) {
    return s;
  }
  std::vector<Ballot> ballots;
  ballots.reserve(inst.n());
  for (const Ballot& b : inst.profile()) ballots.push_back(PermuteSet(b, sigma));
  return Instance::Create(std::move(ballots), inst.m(), inst.k());
}

int64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  int64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
  }
  return result;
}

}  // namespace dpabc
