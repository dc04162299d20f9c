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

#ifndef DPABC_CORE_PROFILE_IO_H_
#define DPABC_CORE_PROFILE_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpabc/core/instance.h"

namespace dpabc {

// Text format for instances:
//
//   # comment
//   m=5 k=2
//   0 2 3
//   1
//
// The first non-blank, non-comment line holds m and k; every following line is
// one voter's approved alternative indices separated by whitespace. Text after
// '#' is ignored. Errors carry the 1-based line number.
absl::StatusOr<Instance> ParseInstance(absl::string_view text);

// Inverse of ParseInstance; ballots are written in ascending index order.
std::string FormatInstance(const Instance& inst);

absl::StatusOr<Instance> ReadInstanceFile(const std::string& path);

}  // namespace dpabc

#endif  // DPABC_CORE_PROFILE_IO_H_
