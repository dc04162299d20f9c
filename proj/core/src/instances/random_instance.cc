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

#include "dpabc/instances/random_instance.h"

#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dpabc {
namespace {

Ballot ImpartialBallot(int m, double p, Rng& rng) {
  while (true) {
    AlternativeSet b;
    for (int a = 0; a < m; ++a) {
      if (rng.Bernoulli(p)) b = b.With(a);
    }
    if (!b.empty()) return b;
  }
}

// Fisher-Yates over [0, m), then cut into `groups` near-equal blocks.
std::vector<Ballot> GroupBlocks(int m, int groups, Rng& rng) {
  std::vector<int> order(m);
  for (int a = 0; a < m; ++a) order[a] = a;
  for (int i = m - 1; i > 0; --i) {
    std::swap(order[i], order[rng.NextBelow(i + 1)]);
  }
  std::vector<Ballot> blocks(groups);
  for (int i = 0; i < m; ++i) {
    blocks[i % groups] = blocks[i % groups].With(order[i]);
  }
  return blocks;
}

}  // namespace

absl::StatusOr<Instance> RandomInstance(int m, int n, int k,
                                        const BallotModel& model,
                                        RandomSeed seed) {
  if (m < 1 || m > kMaxAlternatives || n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid sizes m=", m, ", n=", n));
  }
  Rng rng(seed);
  std::vector<Ballot> ballots;
  ballots.reserve(n);
  switch (model.kind) {
    case BallotModel::Kind::kImpartial: {
      if (!(model.p > 0 && model.p <= 1)) {
        return absl::InvalidArgumentError(
            absl::StrCat("impartial model needs 0 < p <= 1, got ", model.p));
      }
      for (int j = 0; j < n; ++j) ballots.push_back(ImpartialBallot(m, model.p, rng));
      break;
    }
    case BallotModel::Kind::kDisjointGroups: {
      if (model.groups < 1 || model.groups > m) {
        return absl::InvalidArgumentError(absl::StrCat(
            "disjoint-groups model needs 1 <= groups <= m, got ", model.groups));
      }
      const std::vector<Ballot> blocks = GroupBlocks(m, model.groups, rng);
      for (int j = 0; j < n; ++j) {
        ballots.push_back(blocks[rng.NextBelow(model.groups)]);
      }
      break;
    }
  }
  return Instance::Create(std::move(ballots), m, k);
}

}  // namespace dpabc
