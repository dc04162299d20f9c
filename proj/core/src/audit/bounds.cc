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

#include "dpabc/audit/bounds.h"

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "dpabc/core/instance.h"

namespace dpabc {
namespace {

std::vector<Axiom> BoundAxioms(BoundId id) {
  switch (id) {
    case BoundId::kJr:
      return {Axiom::kJR};
    case BoundId::kPjr:
      return {Axiom::kPJR};
    case BoundId::kEjr:
      return {Axiom::kEJR};
    case BoundId::kPe:
      return {Axiom::kPE};
    case BoundId::kCc:
      return {Axiom::kCC};
    case BoundId::kJrPjr:
      return {Axiom::kJR, Axiom::kPJR};
    case BoundId::kJrEjr:
      return {Axiom::kJR, Axiom::kEJR};
    case BoundId::kPjrEjr:
      return {Axiom::kPJR, Axiom::kEJR};
    case BoundId::kPeJr:
      return {Axiom::kPE, Axiom::kJR};
    case BoundId::kPePjr:
      return {Axiom::kPE, Axiom::kPJR};
    case BoundId::kPeEjr:
      return {Axiom::kPE, Axiom::kEJR};
    case BoundId::kPeCc:
      return {Axiom::kPE, Axiom::kCC};
    case BoundId::kCcJr:
      return {Axiom::kCC, Axiom::kJR};
  }
  return {};
}

bool IsPeChainBound(BoundId id) {
  return id == BoundId::kPeJr || id == BoundId::kPePjr ||
         id == BoundId::kPeEjr || id == BoundId::kPeCc;
}

std::string BaseNote(BoundId id) {
  if (id == BoundId::kPeCc) {
    return "the impossibility is printed with its inequality reversed; "
           "checked as lhs <= rhs";
  }
  return "";
}

}  // namespace

absl::string_view BoundName(BoundId id) {
  switch (id) {
    case BoundId::kJr:
      return "jr";
    case BoundId::kPjr:
      return "pjr";
    case BoundId::kEjr:
      return "ejr";
    case BoundId::kPe:
      return "pe";
    case BoundId::kCc:
      return "cc";
    case BoundId::kJrPjr:
      return "jr+pjr";
    case BoundId::kJrEjr:
      return "jr+ejr";
    case BoundId::kPjrEjr:
      return "pjr+ejr";
    case BoundId::kPeJr:
      return "pe+jr";
    case BoundId::kPePjr:
      return "pe+pjr";
    case BoundId::kPeEjr:
      return "pe+ejr";
    case BoundId::kPeCc:
      return "pe+cc";
    case BoundId::kCcJr:
      return "cc+jr";
  }
  return "?";
}

absl::StatusOr<BoundId> ParseBound(absl::string_view name) {
  const std::string lower = absl::AsciiStrToLower(name);
  std::vector<absl::string_view> names;
  for (BoundId id : kAllBounds) {
    if (lower == BoundName(id)) return id;
    names.push_back(BoundName(id));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown bound '", name, "'; expected one of ", absl::StrJoin(names, ", ")));
}

absl::string_view BoundStatement(BoundId id) {
  switch (id) {
    case BoundId::kJr:
      return "theta <= eps";
    case BoundId::kPjr:
      return "rho <= eps";
    case BoundId::kEjr:
      return "kappa <= ceil(n/k)*eps";
    case BoundId::kPe:
      return "beta <= eps/k";
    case BoundId::kCc:
      return "eta <= eps";
    case BoundId::kJrPjr:
      return "theta + rho <= eps";
    case BoundId::kJrEjr:
      return "theta + kappa <= eps";
    case BoundId::kPjrEjr:
      return "rho + kappa <= ceil(n/k)*eps";
    case BoundId::kPeJr:
      return "(nk-1)*beta + theta <= n*eps";
    case BoundId::kPePjr:
      return "(nk-1)*beta + rho <= n*eps";
    case BoundId::kPeEjr:
      return "(nk-1)*beta + kappa <= n*eps";
    case BoundId::kPeCc:
      return "(nk-1)*beta + eta <= n*eps";
    case BoundId::kCcJr:
      return "eta + theta <= 0";
  }
  return "?";
}

absl::string_view LevelName(Axiom ax) {
  switch (ax) {
    case Axiom::kJR:
      return "theta";
    case Axiom::kPJR:
      return "rho";
    case Axiom::kEJR:
      return "kappa";
    case Axiom::kPE:
      return "beta";
    case Axiom::kCC:
      return "eta";
  }
  return "?";
}

std::vector<BoundTerm> BoundTerms(BoundId id, int n, int k) {
  std::vector<BoundTerm> terms;
  for (Axiom ax : BoundAxioms(id)) {
    const int64_t c = (ax == Axiom::kPE && IsPeChainBound(id))
                          ? static_cast<int64_t>(n) * k - 1
                          : 1;
    terms.push_back({ax, c});
  }
  return terms;
}

Rational BoundRhsMultiple(BoundId id, int n, int k) {
  switch (id) {
    case BoundId::kJr:
    case BoundId::kPjr:
    case BoundId::kCc:
    case BoundId::kJrPjr:
    case BoundId::kJrEjr:
      return Rational(1);
    case BoundId::kEjr:
    case BoundId::kPjrEjr:
      return Rational(CeilDiv(n, k));
    case BoundId::kPe:
      return Rational(1, k);
    case BoundId::kPeJr:
    case BoundId::kPePjr:
    case BoundId::kPeEjr:
    case BoundId::kPeCc:
      return Rational(n);
    case BoundId::kCcJr:
      return Rational(0);
  }
  return Rational(0);
}

absl::StatusOr<BoundCheck> CheckBound(BoundId id,
                                      const std::map<Axiom, AxiomLevel>& levels,
                                      int n, int k, double epsilon) {
  BoundCheck check;
  check.id = id;
  check.note = BaseNote(id);
  const Rational rhs_multiple = BoundRhsMultiple(id, n, k);
  check.rhs = RationalToDouble(rhs_multiple) * epsilon;

  std::vector<std::string> vacuous_levels;
  double lhs = 0;
  Rational lhs_multiple(0);
  bool exact = true;
  for (const BoundTerm& term : BoundTerms(id, n, k)) {
    auto it = levels.find(term.axiom);
    if (it == levels.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "bound ", BoundName(id), " needs level ", LevelName(term.axiom)));
    }
    const AxiomLevel& level = it->second;
    if (level.vacuous()) {
      vacuous_levels.emplace_back(LevelName(term.axiom));
      continue;
    }
    lhs += static_cast<double>(term.coefficient) * level.log_value;
    if (level.epsilon_multiple.has_value()) {
      lhs_multiple += Rational(term.coefficient) * *level.epsilon_multiple;
    } else {
      exact = false;
    }
  }
  if (!vacuous_levels.empty()) {
    check.vacuous = true;
    check.satisfied = true;
    check.lhs = kInfiniteLevel;
    check.note = absl::StrCat("vacuous: no constrained pair for ",
                              absl::StrJoin(vacuous_levels, ", "));
    return check;
  }
  check.lhs = lhs;
  if (exact) {
    check.exact = true;
    check.lhs_multiple = lhs_multiple;
    // epsilon > 0, so comparing multiples decides lhs <= rhs.
    check.satisfied = lhs_multiple <= rhs_multiple;
  } else {
    check.satisfied = lhs <= check.rhs + kBoundTolerance;
  }
  return check;
}

absl::StatusOr<BoundCheck> CheckBound(BoundId id,
                                      const std::map<Axiom, double>& levels,
                                      int n, int k, double epsilon) {
  std::map<Axiom, AxiomLevel> wrapped;
  for (const auto& [ax, value] : levels) wrapped[ax].log_value = value;
  return CheckBound(id, wrapped, n, k, epsilon);
}

}  // namespace dpabc
