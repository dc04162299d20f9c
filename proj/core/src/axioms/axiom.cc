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

#include "dpabc/axioms/axiom.h"

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace dpabc {

absl::string_view AxiomName(Axiom ax) {
  switch (ax) {
    case Axiom::kJR:
      return "JR";
    case Axiom::kPJR:
      return "PJR";
    case Axiom::kEJR:
      return "EJR";
    case Axiom::kPE:
      return "PE";
    case Axiom::kCC:
      return "CC";
  }
  return "?";
}

absl::StatusOr<Axiom> ParseAxiom(absl::string_view name) {
  const std::string upper = absl::AsciiStrToUpper(name);
  for (Axiom ax : kAllAxioms) {
    if (upper == AxiomName(ax)) return ax;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown axiom `", name, "`; expected jr|pjr|ejr|pe|cc"));
}

}  // namespace dpabc
