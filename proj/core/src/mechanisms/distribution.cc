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

#include "dpabc/mechanisms/distribution.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dpabc {
namespace {

absl::Status ValidateCommittees(const std::vector<Committee>& committees,
                                size_t weights) {
  if (committees.empty()) {
    return absl::InvalidArgumentError("distribution needs a committee");
  }
  if (committees.size() != weights) {
    return absl::InvalidArgumentError(
        absl::StrCat(committees.size(), " committees but ", weights,
                     " weights"));
  }
  for (size_t i = 1; i < committees.size(); ++i) {
    if (!(committees[i - 1] < committees[i])) {
      return absl::InvalidArgumentError(absl::StrCat(
          "committees out of canonical order at position ", i));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<CommitteeDistribution> CommitteeDistribution::FromExactWeights(
    std::vector<Committee> committees, std::vector<Rational> q,
    double epsilon) {
  if (absl::Status s = ValidateCommittees(committees, q.size()); !s.ok()) {
    return s;
  }
  CommitteeDistribution d;
  d.committees_ = std::move(committees);
  d.q_ = std::move(q);
  d.epsilon_ = epsilon;
  d.log_weights_.reserve(d.q_.size());
  for (Rational r : d.q_) d.log_weights_.push_back(RationalToDouble(r) * epsilon);
  d.Normalize();
  return d;
}

absl::StatusOr<CommitteeDistribution> CommitteeDistribution::FromLogWeights(
    std::vector<Committee> committees, std::vector<double> log_weights,
    double epsilon) {
  if (absl::Status s = ValidateCommittees(committees, log_weights.size());
      !s.ok()) {
    return s;
  }
  for (double w : log_weights) {
    if (!std::isfinite(w)) {
      return absl::InvalidArgumentError("log-weights must be finite");
    }
  }
  CommitteeDistribution d;
  d.committees_ = std::move(committees);
  d.log_weights_ = std::move(log_weights);
  d.epsilon_ = epsilon;
  d.Normalize();
  return d;
}

void CommitteeDistribution::Normalize() {
  const double top =
      *std::max_element(log_weights_.begin(), log_weights_.end());
  double sum = 0;
  for (double w : log_weights_) sum += std::exp(w - top);
  const double log_z = top + std::log(sum);
  log_probabilities_.clear();
  probabilities_.clear();
  for (double w : log_weights_) {
    log_probabilities_.push_back(w - log_z);
    probabilities_.push_back(std::exp(w - log_z));
  }
}

std::optional<size_t> CommitteeDistribution::IndexOf(Committee c) const {
  auto it = std::lower_bound(committees_.begin(), committees_.end(), c);
  if (it == committees_.end() || !(*it == c)) return std::nullopt;
  return static_cast<size_t>(it - committees_.begin());
}

double CommitteeDistribution::ProbabilityOf(Committee c) const {
  std::optional<size_t> i = IndexOf(c);
  return i.has_value() ? probabilities_[*i] : 0.0;
}

absl::StatusOr<double> TotalVariationDistance(const CommitteeDistribution& a,
                                              const CommitteeDistribution& b) {
  if (a.committees() != b.committees()) {
    return absl::InvalidArgumentError(
        "distributions are over different committee lists");
  }
  double total = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    total += std::abs(a.probability(i) - b.probability(i));
  }
  return total / 2;
}

}  // namespace dpabc
