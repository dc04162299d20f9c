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

#include "dpabc/mechanisms/mechanisms.h"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "dpabc/axioms/efficiency.h"
#include "dpabc/axioms/justified_representation.h"
#include "dpabc/core/enumerate.h"
#include "dpabc/mechanisms/sequential_av.h"

namespace dpabc {

absl::string_view MechanismName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kRrJr:
      return "rr-jr";
    case MechanismKind::kRrPjr:
      return "rr-pjr";
    case MechanismKind::kRrEjr:
      return "rr-ejr";
    case MechanismKind::kExpAv:
      return "exp-av";
    case MechanismKind::kSeqAv:
      return "seq-av";
    case MechanismKind::kRrCondorcet:
      return "rr-condorcet";
    case MechanismKind::kUniform:
      return "uniform";
  }
  return "?";
}

absl::StatusOr<MechanismKind> ParseMechanism(absl::string_view name) {
  const std::string lower = absl::AsciiStrToLower(name);
  std::vector<absl::string_view> names;
  for (MechanismKind kind : kAllMechanisms) {
    if (lower == MechanismName(kind)) return kind;
    names.push_back(MechanismName(kind));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown mechanism '", name, "'; expected one of ",
      absl::StrJoin(names, ", ")));
}

absl::Status ValidateEpsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive and finite, got ", epsilon));
  }
  return absl::OkStatus();
}

absl::StatusOr<CommitteeDistribution> RrAxiomDistribution(const Instance& inst,
                                                          double epsilon,
                                                          Axiom ax) {
  if (!IsJrFamily(ax)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "randomized response needs JR, PJR or EJR, got ", AxiomName(ax)));
  }
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  std::vector<Committee> committees = *EnumerateCommittees(inst.m(), inst.k());
  const AxiomChecker checker(inst);
  std::vector<Rational> q;
  q.reserve(committees.size());
  for (Committee c : committees) {
    q.push_back(checker.Satisfies(c, ax) ? Rational(1, 2) : Rational(0));
  }
  return CommitteeDistribution::FromExactWeights(std::move(committees),
                                                 std::move(q), epsilon);
}

absl::StatusOr<CommitteeDistribution> ExpAvDistribution(const Instance& inst,
                                                        double epsilon) {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  std::vector<Committee> committees = *EnumerateCommittees(inst.m(), inst.k());
  std::vector<Rational> q;
  q.reserve(committees.size());
  for (Committee c : committees) {
    q.push_back(Rational(AvScore(c, inst.profile()), 2 * inst.k()));
  }
  return CommitteeDistribution::FromExactWeights(std::move(committees),
                                                 std::move(q), epsilon);
}

absl::StatusOr<CommitteeDistribution> RrCondorcetDistribution(
    const Instance& inst, double epsilon) {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  std::vector<Committee> committees = *EnumerateCommittees(inst.m(), inst.k());
  const std::optional<Committee> wc = CondorcetCommittee(inst);
  std::vector<Rational> q;
  q.reserve(committees.size());
  for (Committee c : committees) {
    q.push_back(wc.has_value() && *wc == c ? Rational(1) : Rational(0));
  }
  return CommitteeDistribution::FromExactWeights(std::move(committees),
                                                 std::move(q), epsilon);
}

absl::StatusOr<CommitteeDistribution> UniformDistribution(const Instance& inst,
                                                          double epsilon) {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  std::vector<Committee> committees = *EnumerateCommittees(inst.m(), inst.k());
  std::vector<Rational> q(committees.size(), Rational(0));
  return CommitteeDistribution::FromExactWeights(std::move(committees),
                                                 std::move(q), epsilon);
}

absl::StatusOr<CommitteeDistribution> ComputeDistribution(
    const Mechanism& mech, const Instance& inst) {
  switch (mech.kind) {
    case MechanismKind::kRrJr:
      return RrAxiomDistribution(inst, mech.epsilon, Axiom::kJR);
    case MechanismKind::kRrPjr:
      return RrAxiomDistribution(inst, mech.epsilon, Axiom::kPJR);
    case MechanismKind::kRrEjr:
      return RrAxiomDistribution(inst, mech.epsilon, Axiom::kEJR);
    case MechanismKind::kExpAv:
      return ExpAvDistribution(inst, mech.epsilon);
    case MechanismKind::kSeqAv:
      return SequentialAvDistribution(inst, mech.epsilon);
    case MechanismKind::kRrCondorcet:
      return RrCondorcetDistribution(inst, mech.epsilon);
    case MechanismKind::kUniform:
      return UniformDistribution(inst, mech.epsilon);
  }
  return absl::InvalidArgumentError("unknown mechanism kind");
}

}  // namespace dpabc
