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

#ifndef DPABC_AUDIT_BOUNDS_H_
#define DPABC_AUDIT_BOUNDS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpabc/audit/levels.h"
#include "dpabc/axioms/axiom.h"
#include "dpabc/mechanisms/rational.h"

namespace dpabc {

// Upper bounds on approximate-axiom levels of epsilon-DP rules, all written
// in the log domain as  sum_i c_i * level_i <= r * epsilon.
enum class BoundId {
  kJr,       // theta <= eps
  kPjr,      // rho <= eps
  kEjr,      // kappa <= ceil(n/k) eps
  kPe,       // beta <= eps / k               (neutral rules)
  kCc,       // eta <= eps
  kJrPjr,    // theta + rho <= eps
  kJrEjr,    // theta + kappa <= eps
  kPjrEjr,   // rho + kappa <= ceil(n/k) eps
  kPeJr,     // (nk-1) beta + theta <= n eps  (neutral rules)
  kPePjr,    // (nk-1) beta + rho <= n eps    (neutral rules)
  kPeEjr,    // (nk-1) beta + kappa <= n eps  (neutral rules)
  kPeCc,     // (nk-1) beta + eta <= n eps    (neutral rules)
  kCcJr,     // eta + theta <= 0
};

inline constexpr std::array<BoundId, 13> kAllBounds = {
    BoundId::kJr,     BoundId::kPjr,   BoundId::kEjr,    BoundId::kPe,
    BoundId::kCc,     BoundId::kJrPjr, BoundId::kJrEjr,  BoundId::kPjrEjr,
    BoundId::kPeJr,   BoundId::kPePjr, BoundId::kPeEjr,  BoundId::kPeCc,
    BoundId::kCcJr};

inline constexpr std::array<BoundId, 5> kTwoWayBounds = {
    BoundId::kJr, BoundId::kPjr, BoundId::kEjr, BoundId::kPe, BoundId::kCc};

inline constexpr std::array<BoundId, 8> kThreeWayBounds = {
    BoundId::kJrPjr, BoundId::kJrEjr, BoundId::kPjrEjr, BoundId::kPeJr,
    BoundId::kPePjr, BoundId::kPeEjr, BoundId::kPeCc,   BoundId::kCcJr};

// Stable identifiers: "jr", "pjr", ..., "jr+pjr", "pe+cc", "cc+jr".
absl::string_view BoundName(BoundId id);
absl::StatusOr<BoundId> ParseBound(absl::string_view name);
// Human-readable inequality, e.g. "theta + rho <= eps".
absl::string_view BoundStatement(BoundId id);

// Greek name of an axiom's level: theta, rho, kappa, beta, eta.
absl::string_view LevelName(Axiom ax);

// One linear term of a bound: coefficient * level(axiom).
struct BoundTerm {
  Axiom axiom;
  int64_t coefficient;
};

// Left-hand terms and right-hand epsilon multiple for given n, k.
std::vector<BoundTerm> BoundTerms(BoundId id, int n, int k);
Rational BoundRhsMultiple(BoundId id, int n, int k);

struct BoundCheck {
  BoundId id;
  double lhs = 0;  // log domain
  double rhs = 0;  // log domain
  // lhs <= rhs + 1e-9, or decided exactly when every level is an exact
  // multiple of epsilon. Vacuous checks count as satisfied.
  bool satisfied = true;
  // Some referenced level is +inf: the level's definition constrains no pair
  // on the measured instances, so the check carries no information.
  bool vacuous = false;
  bool exact = false;
  // The measured family contains an instance set on which the bound is
  // derived. Levels measured on a finite family only over-estimate a rule's
  // level, so an unforced check may exceed its bound without contradicting
  // anything; only forced failures are violations. Set by the caller.
  bool forced = false;
  std::optional<Rational> lhs_multiple;  // lhs / eps when exact
  std::string note;
};

// A forced check that fails.
inline bool IsViolation(const BoundCheck& c) { return c.forced && !c.satisfied; }

inline constexpr double kBoundTolerance = 1e-9;

// Levels keyed by axiom, as plain log values.
absl::StatusOr<BoundCheck> CheckBound(BoundId id,
                                      const std::map<Axiom, double>& levels,
                                      int n, int k, double epsilon);

// As above, but decided exactly when every referenced level carries an
// epsilon multiple.
absl::StatusOr<BoundCheck> CheckBound(BoundId id,
                                      const std::map<Axiom, AxiomLevel>& levels,
                                      int n, int k, double epsilon);

}  // namespace dpabc

#endif  // DPABC_AUDIT_BOUNDS_H_
