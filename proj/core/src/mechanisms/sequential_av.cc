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

#include "dpabc/mechanisms/sequential_av.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dpabc/axioms/efficiency.h"
#include "dpabc/core/enumerate.h"
#include "dpabc/mechanisms/mechanisms.h"

namespace dpabc {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(e^x + e^y), tolerating -inf.
double LogAdd(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

std::vector<double> PickLogWeights(const Instance& inst, double epsilon) {
  std::vector<double> out;
  for (int count : ApprovalCounts(inst)) {
    out.push_back(count * epsilon / (2.0 * inst.k()));
  }
  return out;
}

}  // namespace

absl::StatusOr<CommitteeDistribution> SequentialAvDistribution(
    const Instance& inst, double epsilon) {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  const int m = inst.m();
  const int k = inst.k();
  if (m > kSequentialAvMaxAlternatives) {
    return absl::ResourceExhaustedError(
        absl::StrCat("sequential AV law is limited to m <= ",
                     kSequentialAvMaxAlternatives, ", got m=", m));
  }
  const std::vector<double> logw = PickLogWeights(inst, epsilon);
  const uint64_t full = uint64_t{1} << m;

  // log f(S) for |S| <= k, and log w(A - S) for |S| < k.
  std::vector<double> logf(full, kNegInf);
  std::vector<double> log_rest(full, kNegInf);
  logf[0] = 0;
  for (uint64_t s = 0; s < full; ++s) {
    const int size = std::popcount(s);
    if (size > k) continue;
    if (s != 0) {
      double acc = kNegInf;
      for (uint64_t bits = s; bits != 0; bits &= bits - 1) {
        const int a = std::countr_zero(bits);
        const uint64_t prev = s & ~(uint64_t{1} << a);
        acc = LogAdd(acc, logf[prev] + logw[a] - log_rest[prev]);
      }
      logf[s] = acc;
    }
    if (size < k) {
      double rest = kNegInf;
      for (int a = 0; a < m; ++a) {
        if (((s >> a) & 1) == 0) rest = LogAdd(rest, logw[a]);
      }
      log_rest[s] = rest;
    }
  }

  std::vector<Committee> committees = *EnumerateCommittees(m, k);
  std::vector<double> log_probs;
  log_probs.reserve(committees.size());
  for (Committee c : committees) log_probs.push_back(logf[c.members().bits()]);
  return CommitteeDistribution::FromLogWeights(std::move(committees),
                                               std::move(log_probs), epsilon);
}

absl::StatusOr<Committee> SampleSequentialAv(const Instance& inst,
                                             double epsilon, RandomSeed seed) {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  const std::vector<double> logw = PickLogWeights(inst, epsilon);
  const double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> w;
  for (double x : logw) w.push_back(std::exp(x - top));

  Rng rng(seed);
  AlternativeSet chosen;
  for (int round = 0; round < inst.k(); ++round) {
    double total = 0;
    int last = -1;
    for (int a = 0; a < inst.m(); ++a) {
      if (!chosen.contains(a)) {
        total += w[a];
        last = a;
      }
    }
    const double u = rng.NextDouble() * total;
    double cumulative = 0;
    int pick = last;
    for (int a = 0; a < inst.m(); ++a) {
      if (chosen.contains(a)) continue;
      cumulative += w[a];
      if (u < cumulative) {
        pick = a;
        break;
      }
    }
    chosen = chosen.With(pick);
  }
  return Committee(chosen);
}

}  // namespace dpabc
