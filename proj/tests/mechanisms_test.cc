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

#include <cmath>
#include <map>
#include <vector>

#include "absl/status/status.h"
#include "dpabc/core/enumerate.h"
#include "dpabc/core/instance.h"
#include "dpabc/core/random.h"
#include "dpabc/instances/random_instance.h"
#include "dpabc/mechanisms/distribution.h"
#include "dpabc/mechanisms/mechanisms.h"
#include "dpabc/mechanisms/rational.h"
#include "dpabc/mechanisms/sampler.h"
#include "dpabc/mechanisms/sequential_av.h"
#include "gtest/gtest.h"
#include "oracle.h"
#include "test_util.h"

namespace dpabc {
namespace {

using testing_util::C;
using testing_util::MakeInstance;

Instance RandomSmall(uint64_t seed) {
  Rng rng(RandomSeed{seed});
  const int m = 3 + static_cast<int>(rng.NextBelow(3));
  const int n = 1 + static_cast<int>(rng.NextBelow(5));
  const int k = 1 + static_cast<int>(rng.NextBelow(3));
  return *RandomInstance(m, n, k, BallotModel::Impartial(0.4),
                         RandomSeed{seed + 1000});
}

TEST(RationalTest, ParsesDecimalsAndFractions) {
  EXPECT_EQ(*ParseRational("0.5"), Rational(1, 2));
  EXPECT_EQ(*ParseRational("2"), Rational(2));
  EXPECT_EQ(*ParseRational("0.1"), Rational(1, 10));
  EXPECT_EQ(*ParseRational("3/6"), Rational(1, 2));
  EXPECT_EQ(*ParseRational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(*ParseRational(".5"), Rational(1, 2));
  EXPECT_FALSE(ParseRational("1/0").ok());
  EXPECT_FALSE(ParseRational("abc").ok());
  EXPECT_FALSE(ParseRational("1e3").ok());
  EXPECT_FALSE(ParseRational("99999999999999999999").ok());
  EXPECT_EQ(RationalToString(Rational(6, 4)), "3/2");
  EXPECT_EQ(RationalToString(Rational(3)), "3");
  EXPECT_DOUBLE_EQ(RationalToDouble(Rational(1, 4)), 0.25);
}

TEST(MechanismNameTest, RoundTrip) {
  for (MechanismKind kind : kAllMechanisms) {
    EXPECT_EQ(*ParseMechanism(MechanismName(kind)), kind);
  }
  auto bad = ParseMechanism("laplace");
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(bad.status().message().find("rr-condorcet"), absl::string_view::npos);
}

TEST(DistributionTest, RejectsBadInput) {
  EXPECT_FALSE(CommitteeDistribution::FromExactWeights({}, {}, 1.0).ok());
  EXPECT_FALSE(
      CommitteeDistribution::FromExactWeights({C({0})}, {}, 1.0).ok());
  EXPECT_FALSE(CommitteeDistribution::FromLogWeights(
                   {C({0})}, {std::nan("")}, 1.0)
                   .ok());
  const Instance inst = MakeInstance(4, 2, {{0}});
  EXPECT_FALSE(ExpAvDistribution(inst, 0).ok());
  EXPECT_FALSE(ExpAvDistribution(inst, -1).ok());
  EXPECT_FALSE(ExpAvDistribution(inst, INFINITY).ok());
  EXPECT_FALSE(RrAxiomDistribution(inst, 1, Axiom::kPE).ok());
}

TEST(DistributionTest, RandomizedResponseValues) {
  // JR set {0,1},{0,2},{0,3} out of six committees.
  const Instance inst = MakeInstance(4, 2, {{0}, {0}, {1}, {2}});
  auto dist = RrAxiomDistribution(inst, 1.0, Axiom::kJR);
  ASSERT_TRUE(dist.ok());
  const double h = std::exp(0.5);
  EXPECT_NEAR(dist->ProbabilityOf(C({0, 1})), h / (3 * h + 3), 1e-12);
  EXPECT_NEAR(dist->ProbabilityOf(C({1, 2})), 1 / (3 * h + 3), 1e-12);
  EXPECT_NEAR(dist->ProbabilityOf(C({0, 1})), 0.2075, 1e-4);
  EXPECT_NEAR(dist->ProbabilityOf(C({1, 2})), 0.1258, 1e-4);
  EXPECT_TRUE(dist->is_exact());
  EXPECT_EQ(dist->q(*dist->IndexOf(C({0, 3}))), Rational(1, 2));
  EXPECT_EQ(dist->q(*dist->IndexOf(C({2, 3}))), Rational(0));
  EXPECT_EQ(dist->ProbabilityOf(C({0, 1, 2})), 0.0);
}

TEST(DistributionTest, TotalVariation) {
  const Instance inst = MakeInstance(4, 2, {{0}, {1}});
  auto a = UniformDistribution(inst, 1.0);
  auto b = ExpAvDistribution(inst, 1.0);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(*TotalVariationDistance(*a, *a), 0.0);
  double expected = 0;
  for (size_t i = 0; i < a->size(); ++i) {
    expected += std::abs(a->probability(i) - b->probability(i));
  }
  EXPECT_NEAR(*TotalVariationDistance(*a, *b), expected / 2, 1e-12);
  const Instance other = MakeInstance(5, 2, {{0}});
  EXPECT_FALSE(TotalVariationDistance(*a, *UniformDistribution(other, 1.0)).ok());
}

TEST(MechanismTest, EveryLawMatchesOracle) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = RandomSmall(seed);
    const oracle::RawInstance raw = oracle::ToRaw(inst);
    for (double eps : {0.3, 1.0, 2.5}) {
      for (MechanismKind kind : kAllMechanisms) {
        auto dist = ComputeDistribution({kind, eps}, inst);
        ASSERT_TRUE(dist.ok()) << dist.status();
        const std::map<oracle::Set, double> law = oracle::Law(kind, raw, eps);
        ASSERT_EQ(law.size(), dist->size());
        double total = 0;
        for (size_t i = 0; i < dist->size(); ++i) {
          EXPECT_NEAR(dist->probability(i), law.at(dist->committee(i).indices()),
                      1e-12)
              << MechanismName(kind) << " seed=" << seed;
          EXPECT_NEAR(std::exp(dist->log_probability(i)), dist->probability(i),
                      1e-12);
          total += dist->probability(i);
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
      }
    }
  }
}

TEST(SequentialAvTest, MatchesOrderEnumeration) {
  const Instance inst = MakeInstance(6, 3, {{0, 1}, {0, 2}, {0}, {3, 4, 5}});
  const oracle::RawInstance raw = oracle::ToRaw(inst);
  for (double eps : {0.1, 1.0, 4.0}) {
    auto dist = SequentialAvDistribution(inst, eps);
    ASSERT_TRUE(dist.ok());
    EXPECT_FALSE(dist->is_exact());
    const auto law = oracle::SequentialLaw(raw, eps);
    for (size_t i = 0; i < dist->size(); ++i) {
      EXPECT_NEAR(dist->probability(i), law.at(dist->committee(i).indices()),
                  1e-12);
    }
  }
}

TEST(SequentialAvTest, DiffersFromCommitteeLevelLaw) {
  const Instance inst = MakeInstance(5, 2, {{0, 1}, {0, 1}, {2}});
  auto seq = SequentialAvDistribution(inst, 1.0);
  auto exp_av = ExpAvDistribution(inst, 1.0);
  ASSERT_TRUE(seq.ok() && exp_av.ok());
  EXPECT_GT(*TotalVariationDistance(*seq, *exp_av), 1e-4);
}

TEST(SequentialAvTest, CapAndLiteralSampler) {
  std::vector<Ballot> ballots = {AlternativeSet::Of({0})};
  const Instance big = *Instance::Create(ballots, 17, 2);
  EXPECT_EQ(SequentialAvDistribution(big, 1.0).status().code(),
            absl::StatusCode::kResourceExhausted);
  // The literal sampler has no cap.
  auto c = SampleSequentialAv(big, 1.0, RandomSeed{3});
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->size(), 2);
}

TEST(SequentialAvTest, LiteralSamplerFollowsExactLaw) {
  const Instance inst = MakeInstance(4, 2, {{0, 1}, {0}, {2}});
  auto dist = SequentialAvDistribution(inst, 2.0);
  ASSERT_TRUE(dist.ok());
  constexpr int kDraws = 40000;
  std::map<uint64_t, int> counts;
  for (int s = 0; s < kDraws; ++s) {
    ++counts[SampleSequentialAv(inst, 2.0, RandomSeed{static_cast<uint64_t>(s)})
                 ->members()
                 .bits()];
  }
  for (size_t i = 0; i < dist->size(); ++i) {
    const double p = dist->probability(i);
    const double se = std::sqrt(p * (1 - p) / kDraws);
    const double freq =
        static_cast<double>(counts[dist->committee(i).members().bits()]) / kDraws;
    EXPECT_NEAR(freq, p, 4 * se) << dist->committee(i).ToString();
  }
}

TEST(SamplerTest, DeterministicAndInverseCdf) {
  const Instance inst = MakeInstance(4, 2, {{0}, {0}, {1}, {2}});
  auto dist = RrAxiomDistribution(inst, 1.0, Axiom::kJR);
  ASSERT_TRUE(dist.ok());
  EXPECT_EQ(Sample(*dist, RandomSeed{9}), Sample(*dist, RandomSeed{9}));
  EXPECT_EQ(SampleAt(*dist, 0.0), dist->committee(0));
  EXPECT_EQ(SampleAt(*dist, 0.999999999999), dist->committee(dist->size() - 1));
  const double first = dist->probability(0);
  EXPECT_EQ(SampleAt(*dist, first - 1e-9), dist->committee(0));
  EXPECT_EQ(SampleAt(*dist, first + 1e-9), dist->committee(1));
}

TEST(MechanismTest, NeutralUnderRelabeling) {
  const Permutation sigma = {3, 0, 4, 1, 2};
  for (uint64_t seed = 50; seed < 60; ++seed) {
    const Instance inst = *RandomInstance(5, 4, 2, BallotModel::Impartial(0.4),
                                          RandomSeed{seed});
    const Instance permuted = *Permute(inst, sigma);
    for (MechanismKind kind : kAllMechanisms) {
      auto a = ComputeDistribution({kind, 1.0}, inst);
      auto b = ComputeDistribution({kind, 1.0}, permuted);
      ASSERT_TRUE(a.ok() && b.ok());
      for (size_t i = 0; i < a->size(); ++i) {
        EXPECT_NEAR(a->probability(i),
                    b->ProbabilityOf(PermuteCommittee(a->committee(i), sigma)),
                    1e-12)
            << MechanismName(kind);
      }
    }
  }
}

TEST(MechanismTest, FullSupportAndSpread) {
  for (uint64_t seed = 70; seed < 90; ++seed) {
    const Instance inst = RandomSmall(seed);
    for (MechanismKind kind : kAllMechanisms) {
      const double eps = 1.5;
      auto dist = ComputeDistribution({kind, eps}, inst);
      ASSERT_TRUE(dist.ok());
      double lo = INFINITY, hi = -INFINITY;
      for (size_t i = 0; i < dist->size(); ++i) {
        EXPECT_GT(dist->probability(i), 0.0);
        lo = std::min(lo, dist->log_probability(i));
        hi = std::max(hi, dist->log_probability(i));
      }
      EXPECT_LE(hi - lo, inst.n() * eps + 1e-9) << MechanismName(kind);
    }
  }
}

TEST(MechanismTest, LargeEpsilonStaysFinite) {
  const Instance inst = MakeInstance(5, 2, {{0, 1}, {0, 1}, {0, 1}, {2}});
  for (MechanismKind kind : kAllMechanisms) {
    auto dist = ComputeDistribution({kind, 2000.0}, inst);
    ASSERT_TRUE(dist.ok());
    double total = 0;
    for (double p : dist->probabilities()) {
      EXPECT_TRUE(std::isfinite(p));
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace dpabc
