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

#include "dpabc/core/alternative_set.h"

#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace dpabc {

AlternativeSet AlternativeSet::Of(std::initializer_list<int> members) {
  uint64_t bits = 0;
  for (int a : members) bits |= uint64_t{1} << a;
  return FromBits(bits);
}

AlternativeSet AlternativeSet::Of(const std::vector<int>& members) {
  uint64_t bits = 0;
  for (int a : members) bits |= uint64_t{1} << a;
  return FromBits(bits);
}

std::vector<int> AlternativeSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string AlternativeSet::ToString() const {
  return absl::StrCat("{", absl::StrJoin(members(), ","), "}");
}

}  // namespace dpabc
