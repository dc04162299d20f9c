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

#include "dpabc/axioms/justified_representation.h"

#include <algorithm>
#include <vector>

#include "dpabc/axioms/efficiency.h"
#include "dpabc/core/enumerate.h"

namespace dpabc {

AxiomChecker::AxiomChecker(const Instance& inst) : inst_(inst), index_(inst) {}

bool AxiomChecker::SatisfiesJr(Committee w) const {
  const auto& types = index_.ballot_types();
  const auto& mult = index_.multiplicity();
  for (const CohesionIndex::Group& g : index_.groups(1)) {
    int unrepresented = 0;
    for (int t : g.types) {
      if ((types[t] & w.members()).empty()) unrepresented += mult[t];
    }
    if (MeetsCohesionQuota(unrepresented, 1, index_.n(), index_.k())) {
      return false;
    }
  }
  return true;
}

bool AxiomChecker::SatisfiesEjr(Committee w) const {
  const auto& types = index_.ballot_types();
  const auto& mult = index_.multiplicity();
  for (int ell = 1; ell <= index_.k(); ++ell) {
    for (const CohesionIndex::Group& g : index_.groups(ell)) {
      int below = 0;
      for (int t : g.types) {
        if ((types[t] & w.members()).size() < ell) below += mult[t];
      }
      if (MeetsCohesionQuota(below, ell, index_.n(), index_.k())) {
        return false;
      }
    }
  }
  return true;
}

bool AxiomChecker::SatisfiesPjr(Committee w) const {
  const auto& types = index_.ballot_types();
  const auto& mult = index_.multiplicity();
  std::vector<AlternativeSet> covered(types.size());
  for (size_t t = 0; t < types.size(); ++t) covered[t] = types[t] & w.members();

  for (int ell = 1; ell <= index_.k(); ++ell) {
    const auto& groups = index_.groups(ell);
    if (groups.empty()) continue;
    bool violated = false;
    ForEachSubsetOfSize(w.members(), ell - 1, [&](AlternativeSet u) {
      if (violated) return;
      for (const CohesionIndex::Group& g : groups) {
        int voters = 0;
        for (int t : g.types) {
          if (covered[t].IsSubsetOf(u)) voters += mult[t];
        }
        if (MeetsCohesionQuota(voters, ell, index_.n(), index_.k())) {
          violated = true;
          return;
        }
      }
    });
    if (violated) return false;
  }
  return true;
}

bool AxiomChecker::Satisfies(Committee w, Axiom ax) const {
  switch (ax) {
    case Axiom::kJR:
      return SatisfiesJr(w);
    case Axiom::kPJR:
      return SatisfiesPjr(w);
    case Axiom::kEJR:
      return SatisfiesEjr(w);
    case Axiom::kPE: {
      const std::vector<Committee> optimal = ParetoOptimalCommittees(inst_);
      return std::find(optimal.begin(), optimal.end(), w) != optimal.end();
    }
    case Axiom::kCC: {
      const std::optional<Committee> wc = CondorcetCommittee(inst_);
      return !wc.has_value() || *wc == w;
    }
  }
  return false;
}

bool SatisfiesAxiom(Committee w, const Instance& inst, Axiom ax) {
  return AxiomChecker(inst).Satisfies(w, ax);
}

std::vector<Committee> AxiomCommitteeSet(const Instance& inst, Axiom ax) {
  std::vector<Committee> all = *EnumerateCommittees(inst.m(), inst.k());
  switch (ax) {
    case Axiom::kPE:
      return ParetoOptimalCommittees(inst);
    case Axiom::kCC: {
      const std::optional<Committee> wc = CondorcetCommittee(inst);
      if (!wc.has_value()) return all;
      return {*wc};
    }
    default:
      break;
  }
  const AxiomChecker checker(inst);
  std::vector<Committee> out;
  for (Committee c : all) {
    if (checker.Satisfies(c, ax)) out.push_back(c);
  }
  return out;
}

}  // namespace dpabc
