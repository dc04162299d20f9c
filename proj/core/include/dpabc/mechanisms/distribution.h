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

#ifndef DPABC_MECHANISMS_DISTRIBUTION_H_
#define DPABC_MECHANISMS_DISTRIBUTION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "dpabc/core/alternative_set.h"
#include "dpabc/mechanisms/rational.h"

namespace dpabc {

// A probability law over all size-k committees, in canonical order.
//
// Weights are kept unnormalized in the log domain. When the law comes from a
// weight of the form e^{q * epsilon} with q rational, the exact q is retained
// and ratios between committees are exact multiples of epsilon. Probabilities
// are normalized once at construction with log-sum-exp.
class CommitteeDistribution {
 public:
  // committees must be canonical and non-empty; q.size() == committees.size().
  static absl::StatusOr<CommitteeDistribution> FromExactWeights(
      std::vector<Committee> committees, std::vector<Rational> q,
      double epsilon);
  // Arbitrary finite natural-log weights; no exact representation.
  static absl::StatusOr<CommitteeDistribution> FromLogWeights(
      std::vector<Committee> committees, std::vector<double> log_weights,
      double epsilon);

  size_t size() const { return committees_.size(); }
  const std::vector<Committee>& committees() const { return committees_; }
  const Committee& committee(size_t i) const { return committees_[i]; }
  double epsilon() const { return epsilon_; }

  bool is_exact() const { return !q_.empty(); }
  // Requires is_exact().
  Rational q(size_t i) const { return q_[i]; }
  double log_weight(size_t i) const { return log_weights_[i]; }
  double log_probability(size_t i) const { return log_probabilities_[i]; }
  double probability(size_t i) const { return probabilities_[i]; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  // Position of c in the canonical order, if present.
  std::optional<size_t> IndexOf(Committee c) const;
  // 0 for committees outside the support list.
  double ProbabilityOf(Committee c) const;

 private:
  CommitteeDistribution() = default;
  void Normalize();

  std::vector<Committee> committees_;
  std::vector<Rational> q_;
  std::vector<double> log_weights_;
  std::vector<double> log_probabilities_;
  std::vector<double> probabilities_;
  double epsilon_ = 0;
};

// Sum of |p(W) - p'(W)| / 2 over the canonical committees. Both laws must be
// over the same committee list.
absl::StatusOr<double> TotalVariationDistance(const CommitteeDistribution& a,
                                              const CommitteeDistribution& b);

}  // namespace dpabc

#endif  // DPABC_MECHANISMS_DISTRIBUTION_H_
