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

#ifndef DPABC_MECHANISMS_RATIONAL_H_
#define DPABC_MECHANISMS_RATIONAL_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "boost/rational.hpp"

namespace dpabc {

// Exact multiples of epsilon. Log-weights, level coefficients and CLI epsilon
// values that parse as plain decimals are all held in this type.
using Rational = boost::rational<int64_t>;

// "0", "1/2", "-3/4".
std::string RationalToString(Rational r);

double RationalToDouble(Rational r);

// Parses "2", "-0.25", "1/3". Decimal strings are converted exactly. Fails
// on anything else, including exponents and values overflowing int64.
absl::StatusOr<Rational> ParseRational(absl::string_view text);

}  // namespace dpabc

#endif  // DPABC_MECHANISMS_RATIONAL_H_
