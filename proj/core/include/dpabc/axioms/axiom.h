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

#ifndef DPABC_AXIOMS_AXIOM_H_
#define DPABC_AXIOMS_AXIOM_H_

#include <array>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace dpabc {

enum class Axiom {
  kJR,   // justified representation
  kPJR,  // proportional justified representation
  kEJR,  // extended justified representation
  kPE,   // Pareto efficiency
  kCC,   // Condorcet criterion
};

inline constexpr std::array<Axiom, 5> kAllAxioms = {
    Axiom::kJR, Axiom::kPJR, Axiom::kEJR, Axiom::kPE, Axiom::kCC};
inline constexpr std::array<Axiom, 3> kJrFamily = {Axiom::kJR, Axiom::kPJR,
                                                   Axiom::kEJR};

constexpr bool IsJrFamily(Axiom ax) {
  return ax == Axiom::kJR || ax == Axiom::kPJR || ax == Axiom::kEJR;
}

// "JR", "PJR", ...
absl::string_view AxiomName(Axiom ax);

// Case-insensitive inverse of AxiomName.
absl::StatusOr<Axiom> ParseAxiom(absl::string_view name);

}  // namespace dpabc

#endif  // DPABC_AXIOMS_AXIOM_H_
