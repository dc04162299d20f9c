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

#ifndef DPABC_MECHANISMS_MECHANISMS_H_
#define DPABC_MECHANISMS_MECHANISMS_H_

#include <array>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpabc/axioms/axiom.h"
#include "dpabc/core/instance.h"
#include "dpabc/mechanisms/distribution.h"

namespace dpabc {

enum class MechanismKind {
  kRrJr,         // randomized response on JR(P,k)
  kRrPjr,        // randomized response on PJR(P,k)
  kRrEjr,        // randomized response on EJR(P,k)
  kExpAv,        // committee-level exponential mechanism on AV score
  kSeqAv,        // k sequential exponential picks without replacement
  kRrCondorcet,  // randomized response on the Condorcet committee
  kUniform,      // uniform over all committees
};

inline constexpr std::array<MechanismKind, 7> kAllMechanisms = {
    MechanismKind::kRrJr,  MechanismKind::kRrPjr,        MechanismKind::kRrEjr,
    MechanismKind::kExpAv, MechanismKind::kSeqAv,        MechanismKind::kRrCondorcet,
    MechanismKind::kUniform};

// CLI spelling: "rr-jr", "exp-av", ...
absl::string_view MechanismName(MechanismKind kind);
absl::StatusOr<MechanismKind> ParseMechanism(absl::string_view name);

struct Mechanism {
  MechanismKind kind;
  double epsilon;
};

// Weight e^{epsilon/2} on committees satisfying ax, 1 elsewhere. ax must be
// JR, PJR or EJR.
absl::StatusOr<CommitteeDistribution> RrAxiomDistribution(const Instance& inst,
                                                          double epsilon,
                                                          Axiom ax);

// Weight e^{AV(W) * epsilon / (2k)}.
absl::StatusOr<CommitteeDistribution> ExpAvDistribution(const Instance& inst,
                                                        double epsilon);

// Weight e^{epsilon} on the Condorcet committee and 1 elsewhere; uniform when
// there is no Condorcet committee.
absl::StatusOr<CommitteeDistribution> RrCondorcetDistribution(
    const Instance& inst, double epsilon);

// Every committee weight 1. epsilon is recorded but plays no role.
absl::StatusOr<CommitteeDistribution> UniformDistribution(const Instance& inst,
                                                          double epsilon);

// Dispatches on mech.kind. kSeqAv returns the exact law of the sequential
// sampler (see sequential_av.h).
absl::StatusOr<CommitteeDistribution> ComputeDistribution(const Mechanism& mech,
                                                          const Instance& inst);

// Fails unless epsilon is finite and positive.
absl::Status ValidateEpsilon(double epsilon);

}  // namespace dpabc

#endif  // DPABC_MECHANISMS_MECHANISMS_H_
