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

#include "dpabc/core/profile_io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace dpabc {
namespace {

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

// Parses "key=<int>".
bool ParseAssignment(absl::string_view token, absl::string_view key, int* out) {
  if (!absl::ConsumePrefix(&token, key) || !absl::ConsumePrefix(&token, "=")) {
    return false;
  }
  return absl::SimpleAtoi(token, out);
}

}  // namespace

absl::StatusOr<Instance> ParseInstance(absl::string_view text) {
  bool have_header = false;
  int m = 0;
  int k = 0;
  std::vector<Ballot> ballots;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    if (size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<absl::string_view> tokens =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 2 || !ParseAssignment(tokens[0], "m", &m) ||
          !ParseAssignment(tokens[1], "k", &k)) {
        return LineError(line_number, "expected header `m=<int> k=<int>`");
      }
      if (m < 3 || m > kMaxAlternatives) {
        return LineError(line_number, absl::StrCat("m must lie in [3, ",
                                                   kMaxAlternatives, "]"));
      }
      if (k < 1 || k > m) {
        return LineError(line_number, "k must lie in [1, m]");
      }
      have_header = true;
      continue;
    }

    uint64_t bits = 0;
    for (absl::string_view token : tokens) {
      int a = 0;
      if (!absl::SimpleAtoi(token, &a)) {
        return LineError(line_number,
                         absl::StrCat("`", token, "` is not an integer"));
      }
      if (a < 0 || a >= m) {
        return LineError(line_number, absl::StrCat("alternative ", a,
                                                   " outside [0, ", m, ")"));
      }
      bits |= uint64_t{1} << a;
    }
    ballots.push_back(Ballot::FromBits(bits));
  }
  if (!have_header) {
    return absl::InvalidArgumentError("missing header `m=<int> k=<int>`");
  }
  if (ballots.empty()) {
    return absl::InvalidArgumentError("profile has no voters");
  }
  return Instance::Create(std::move(ballots), m, k);
}

std::string FormatInstance(const Instance& inst) {
  std::string out = absl::StrCat("m=", inst.m(), " k=", inst.k(), "\n");
  for (const Ballot& b : inst.profile()) {
    absl::StrAppend(&out, absl::StrJoin(b.members(), " "), "\n");
  }
  return out;
}

absl::StatusOr<Instance> ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<Instance> inst = ParseInstance(buffer.str());
  if (!inst.ok()) {
    return absl::Status(inst.status().code(),
                        absl::StrCat(path, ": ", inst.status().message()));
  }
  return inst;
}

}  // namespace dpabc
