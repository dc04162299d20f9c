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

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "absl/status/status.h"
#include "dpabc/audit/bounds.h"
#include "dpabc/audit/dp_audit.h"
#include "dpabc/audit/levels.h"
#include "dpabc/audit/tradeoff.h"
#include "dpabc/audit/witness_audit.h"
#include "dpabc/core/enumerate.h"
#include "dpabc/core/random.h"
#include "dpabc/instances/random_instance.h"
#include "dpabc/instances/witness.h"
#include "dpabc/mechanisms/mechanisms.h"
#include "gtest/gtest.h"
#include "oracle.h"
#include "test_util.h"

namespace dpabc {
namespace {

using testing_util::C;
using testing_util::MakeInstance;

TEST(LevelsTest, BoundaryLevelPicksLightestMemberAndHeaviestOutsider) {
  auto dist = CommitteeDistribution::FromLogWeights(
      {C({0, 1}), C({0, 2}), C({1, 2})}, {2.0, 1.0, 0.5}, 1.0);
  ASSERT_TRUE(dist.ok());
  const AxiomLevel level = BoundaryLevel(*dist, {true, false, true});
  EXPECT_NEAR(level.log_value, 0.5 - 1.0, 1e-12);
  EXPECT_FALSE(level.epsilon_multiple.has_value());
  ASSERT_TRUE(level.attaining_pair.has_value());
  EXPECT_EQ(level.attaining_pair->first, C({1, 2}));
  EXPECT_EQ(level.attaining_pair->second, C({0, 2}));
  EXPECT_TRUE(BoundaryLevel(*dist, {true, true, true}).vacuous());
  EXPECT_TRUE(BoundaryLevel(*dist, {false, false, false}).vacuous());
}

TEST(LevelsTest, RandomizedResponseLevelIsHalfEpsilon) {
  const Instance inst = MakeInstance(4, 2, {{0}, {0}, {1}, {2}});
  auto dist = RrAxiomDistribution(inst, 0.8, Axiom::kJR);
  ASSERT_TRUE(dist.ok());
  const AxiomLevel theta = JrFamilyLevel(*dist, inst, Axiom::kJR);
  ASSERT_TRUE(theta.epsilon_multiple.has_value());
  EXPECT_EQ(*theta.epsilon_multiple, Rational(1, 2));
  EXPECT_DOUBLE_EQ(theta.log_value, 0.4);
}

TEST(LevelsTest, MinLevelPrefersExactComparisonAndSkipsVacuous) {
  AxiomLevel a;
  a.log_value = 0.5;
  a.epsilon_multiple = Rational(1, 2);
  AxiomLevel b;
  b.log_value = 0.25;
  b.epsilon_multiple = Rational(1, 4);
  EXPECT_EQ(*MinLevel(a, b).epsilon_multiple, Rational(1, 4));
  EXPECT_EQ(*MinLevel(AxiomLevel{}, a).epsilon_multiple, Rational(1, 2));
  EXPECT_EQ(*MinLevel(a, AxiomLevel{}).epsilon_multiple, Rational(1, 2));
  EXPECT_TRUE(MinLevel(AxiomLevel{}, AxiomLevel{}).vacuous());
}

TEST(LevelsTest, PeLevelOnChainForExpAv) {
  const WitnessInstance w = *MakeWitness(WitnessId::kPeChain);
  auto dist = ExpAvDistribution(w.instance, 1.0);
  ASSERT_TRUE(dist.ok());
  const AxiomLevel beta = PeLevel(*dist, w.instance);
  // The smallest AV gap between a dominating and a dominated committee is 1.
  ASSERT_TRUE(beta.epsilon_multiple.has_value());
  EXPECT_EQ(*beta.epsilon_multiple, Rational(1, 4));
}

TEST(DpAuditTest, MatchesNeighborOracle) {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const Instance inst = *RandomInstance(4, 1 + seed % 3, 2,
                                          BallotModel::Impartial(0.4),
                                          RandomSeed{seed});
    const oracle::RawInstance raw = oracle::ToRaw(inst);
    for (MechanismKind kind : kAllMechanisms) {
      auto report = DpLevel({kind, 1.0}, inst);
      ASSERT_TRUE(report.ok());
      EXPECT_NEAR(report->max_log_ratio, oracle::DpLevel(kind, raw, 1.0), 1e-9)
          << MechanismName(kind) << " seed=" << seed;
      EXPECT_EQ(report->instances_checked, NeighborCount(inst));
      EXPECT_LE(report->max_log_ratio, 1.0 + 1e-9);
    }
  }
}

TEST(DpAuditTest, ReportsAttainingNeighbor) {
  const WitnessInstance w = *MakeWitness(WitnessId::kCcUpper);
  auto report = DpLevel({MechanismKind::kRrCondorcet, 1.0}, w.instance);
  ASSERT_TRUE(report.ok());
  EXPECT_NEAR(report->max_log_ratio, 1.0, 1e-9);
  ASSERT_TRUE(report->neighbor.has_value());
  ASSERT_TRUE(report->committee.has_value());
  auto d = ProfileDistance(report->instance->profile(),
                           report->neighbor->profile());
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(*d, 1);
}

TEST(DpAuditTest, CapsAlternatives) {
  std::vector<Ballot> ballots = {AlternativeSet::Of({0})};
  const Instance big = *Instance::Create(ballots, kDpAuditMaxAlternatives + 1, 2);
  auto report = DpLevel({MechanismKind::kUniform, 1.0}, big);
  EXPECT_EQ(report.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_NE(report.status().message().find("m <= 8"), absl::string_view::npos);
}

TEST(BoundsTest, NamesAndTerms) {
  for (BoundId id : kAllBounds) {
    EXPECT_EQ(*ParseBound(BoundName(id)), id);
    EXPECT_FALSE(BoundStatement(id).empty());
  }
  EXPECT_FALSE(ParseBound("jr+pe+cc").ok());
  EXPECT_EQ(LevelName(Axiom::kJR), "theta");
  EXPECT_EQ(LevelName(Axiom::kCC), "eta");
  const std::vector<BoundTerm> terms = BoundTerms(BoundId::kPeEjr, 3, 2);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].axiom, Axiom::kPE);
  EXPECT_EQ(terms[0].coefficient, 5);
  EXPECT_EQ(terms[1].coefficient, 1);
  EXPECT_EQ(BoundRhsMultiple(BoundId::kEjr, 5, 2), Rational(3));
  EXPECT_EQ(BoundRhsMultiple(BoundId::kPe, 5, 2), Rational(1, 2));
  EXPECT_EQ(BoundRhsMultiple(BoundId::kCcJr, 5, 2), Rational(0));
}

TEST(BoundsTest, ExactComparisonHasNoSlack) {
  std::map<Axiom, AxiomLevel> levels;
  levels[Axiom::kJR].log_value = 1.0;
  levels[Axiom::kJR].epsilon_multiple = Rational(1);
  auto at = CheckBound(BoundId::kJr, levels, 4, 2, 1.0);
  ASSERT_TRUE(at.ok());
  EXPECT_TRUE(at->satisfied);
  EXPECT_TRUE(at->exact);
  levels[Axiom::kJR].epsilon_multiple = Rational(1000000001, 1000000000);
  levels[Axiom::kJR].log_value = 1.000000001;
  auto over = CheckBound(BoundId::kJr, levels, 4, 2, 1.0);
  ASSERT_TRUE(over.ok());
  EXPECT_FALSE(over->satisfied);
}

TEST(BoundsTest, InexactComparisonUsesTolerance) {
  auto ok = CheckBound(BoundId::kCcJr,
                       std::map<Axiom, double>{{Axiom::kCC, 0.7},
                                               {Axiom::kJR, -0.7 + 1e-12}},
                       3, 3, 1.0);
  ASSERT_TRUE(ok.ok());
  EXPECT_TRUE(ok->satisfied);
  EXPECT_FALSE(ok->exact);
  auto bad = CheckBound(BoundId::kCcJr,
                        std::map<Axiom, double>{{Axiom::kCC, 0.7},
                                                {Axiom::kJR, -0.6}},
                        3, 3, 1.0);
  ASSERT_TRUE(bad.ok());
  EXPECT_FALSE(bad->satisfied);
  EXPECT_FALSE(IsViolation(*bad));  // forced is set by the witness audit
  bad->forced = true;
  EXPECT_TRUE(IsViolation(*bad));
}

TEST(BoundsTest, VacuousAndMissingLevels) {
  auto vac = CheckBound(BoundId::kPeCc,
                        std::map<Axiom, double>{{Axiom::kPE, 0.1},
                                                {Axiom::kCC, kInfiniteLevel}},
                        3, 2, 1.0);
  ASSERT_TRUE(vac.ok());
  EXPECT_TRUE(vac->vacuous);
  EXPECT_TRUE(vac->satisfied);
  EXPECT_FALSE(CheckBound(BoundId::kPeCc,
                          std::map<Axiom, double>{{Axiom::kPE, 0.1}}, 3, 2, 1.0)
                   .ok());
}

TEST(TradeoffTest, MeasureLevelsRejectsMixedFamilies) {
  const Instance a = MakeInstance(4, 2, {{0}});
  const Instance b = MakeInstance(4, 3, {{0}});
  const Mechanism mech{MechanismKind::kUniform, 1.0};
  EXPECT_FALSE(MeasureLevels(mech, {}).ok());
  EXPECT_FALSE(MeasureLevels(mech, {a, b}).ok());
  auto levels = MeasureLevels(mech, {a});
  ASSERT_TRUE(levels.ok());
  EXPECT_EQ(levels->size(), 5u);
  EXPECT_EQ(*levels->at(Axiom::kPE).epsilon_multiple, Rational(0));
}

TEST(TradeoffTest, JrProbabilityBound) {
  auto b = JrProbabilityBound(std::exp(0.5), 3, 4, 2);
  ASSERT_TRUE(b.ok());
  const double t = std::exp(0.5);
  EXPECT_NEAR(b->instance_bound, 3 * t / (3 * t + 3), 1e-12);
  EXPECT_NEAR(b->instance_free_bound, t / (t + 5), 1e-12);
  EXPECT_LE(b->instance_free_bound, b->instance_bound);
  EXPECT_FALSE(JrProbabilityBound(1.0, 0, 4, 2).ok());
  EXPECT_FALSE(JrProbabilityBound(1.0, 7, 4, 2).ok());
  EXPECT_FALSE(JrProbabilityBound(0.0, 3, 4, 2).ok());
}

TEST(TradeoffTest, SpreadAndMass) {
  const Instance inst = MakeInstance(4, 2, {{0}, {0}, {1}, {2}});
  auto dist = RrAxiomDistribution(inst, 1.0, Axiom::kJR);
  ASSERT_TRUE(dist.ok());
  EXPECT_NEAR(LogProbabilitySpread(*dist), 0.5, 1e-12);
  const double h = std::exp(0.5);
  EXPECT_NEAR(AxiomMass(*dist, inst, Axiom::kJR), 3 * h / (3 * h + 3), 1e-12);
}

TEST(WitnessAuditTest, ForcingMap) {
  EXPECT_EQ(ForcingWitness(BoundId::kJr), WitnessId::kJrUpper);
  EXPECT_EQ(ForcingWitness(BoundId::kPeCc), WitnessId::kPeChain);
  EXPECT_EQ(ForcingWitness(BoundId::kCcJr), WitnessId::kCcJrIncompat);
  EXPECT_EQ(ForcingWitness(BoundId::kPjrEjr), WitnessId::kPjrEjr3Way);
  // JR cannot separate the two 3-way profiles, so nothing forces these.
  EXPECT_EQ(ForcingWitness(BoundId::kJrPjr), std::nullopt);
  EXPECT_EQ(ForcingWitness(BoundId::kJrEjr), std::nullopt);
}

TEST(WitnessAuditTest, SharedFamilyCollectsCompatibleWitnesses) {
  const AuditFamily family = SharedParameterFamily({3, 3, 8});
  const auto has = [&](WitnessId id) {
    return std::find(family.members.begin(), family.members.end(), id) !=
           family.members.end();
  };
  EXPECT_TRUE(has(WitnessId::kPjrEjr3Way));
  EXPECT_TRUE(has(WitnessId::kCcJrIncompat));
  EXPECT_TRUE(has(WitnessId::kPeChain));
  for (const Instance& inst : family.instances) {
    EXPECT_EQ(inst.n(), 3);
    EXPECT_EQ(inst.k(), 3);
  }
  EXPECT_FALSE(WitnessAuditFamily(WitnessId::kCcUpper, {4, 2, 4}).ok());
}

TEST(WitnessAuditTest, ForcedChecksPassForEveryMechanism) {
  for (WitnessId id : kAllWitnesses) {
    auto family = WitnessAuditFamily(id, DefaultParams(id));
    ASSERT_TRUE(family.ok());
    for (MechanismKind kind : kAllMechanisms) {
      auto report = AuditFamilyBounds({kind, 1.0}, *family, kAllBounds);
      ASSERT_TRUE(report.ok());
      for (const BoundCheck& c : report->checks) {
        EXPECT_FALSE(IsViolation(c))
            << WitnessName(id) << " " << MechanismName(kind) << " "
            << BoundName(c.id);
      }
    }
  }
}

}  // namespace
}  // namespace dpabc
