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

#ifndef DPABC_TOOLS_CLI_H_
#define DPABC_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpabc/axioms/axiom.h"
#include "dpabc/core/random.h"
#include "dpabc/instances/witness.h"
#include "dpabc/mechanisms/mechanisms.h"
#include "dpabc/mechanisms/rational.h"

namespace dpabc::cli {

enum class Command { kDist, kSample, kAxioms, kAuditDp, kAuditAxioms, kReproduce };

absl::string_view CommandName(Command command);

enum class OutputFormat { kTable, kStructured };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPolicyCap = 3;

// Commands that enumerate every committee refuse instances with more than
// this many.
inline constexpr int64_t kMaxCommittees = 1 << 20;

struct Epsilon {
  double value = 0;
  std::optional<Rational> exact;  // set when the text is an exact decimal
  std::string text;
};

// Accepts decimals ("0.5"), fractions ("1/2") and, failing both, any finite
// floating-point literal. Must be positive.
absl::StatusOr<Epsilon> ParseEpsilon(absl::string_view text);

struct RunConfig {
  Command command = Command::kDist;
  std::optional<MechanismKind> mechanism;
  std::optional<std::string> epsilon;
  std::optional<Axiom> axiom;
  std::string input;  // profile path; exclusive with witness
  std::optional<WitnessId> witness;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  RandomSeed seed;
  OutputFormat format = OutputFormat::kTable;
  std::string output;  // empty: write to `out`
};

// Executes one command. Reports go to config.output when set, else `out`;
// diagnostics go to `err`. Returns one of the kExit* codes.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and calls Run. Usage errors return kExitUsage.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace dpabc::cli

#endif  // DPABC_TOOLS_CLI_H_
