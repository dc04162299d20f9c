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

#include "dpabc/mechanisms/rational.h"

#include <cstdint>
#include <limits>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace dpabc {
namespace {

absl::Status Malformed(absl::string_view text) {
  return absl::InvalidArgumentError(
      absl::StrCat("not a decimal or fraction: '", text, "'"));
}

bool AllDigits(absl::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!absl::ascii_isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string RationalToString(Rational r) {
  if (r.denominator() == 1) return absl::StrCat(r.numerator());
  return absl::StrCat(r.numerator(), "/", r.denominator());
}

double RationalToDouble(Rational r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

absl::StatusOr<Rational> ParseRational(absl::string_view text) {
  absl::string_view s = absl::StripAsciiWhitespace(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  try {
    if (s.find('/') != absl::string_view::npos) {
      std::pair<absl::string_view, absl::string_view> parts =
          absl::StrSplit(s, absl::MaxSplits('/', 1));
      int64_t num = 0;
      int64_t den = 0;
      if (!AllDigits(parts.first) || !AllDigits(parts.second) ||
          !absl::SimpleAtoi(parts.first, &num) ||
          !absl::SimpleAtoi(parts.second, &den)) {
        return Malformed(text);
      }
      if (den == 0) {
        return absl::InvalidArgumentError(
            absl::StrCat("zero denominator in '", text, "'"));
      }
      return Rational(negative ? -num : num, den);
    }
    std::pair<absl::string_view, absl::string_view> parts =
        absl::StrSplit(s, absl::MaxSplits('.', 1));
    const absl::string_view whole = parts.first;
    const absl::string_view frac = parts.second;
    if (whole.empty() && frac.empty()) return Malformed(text);
    if ((!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac)) || frac.size() > 18) {
      return Malformed(text);
    }
    int64_t w = 0;
    int64_t f = 0;
    if (!whole.empty() && !absl::SimpleAtoi(whole, &w)) return Malformed(text);
    if (!frac.empty() && !absl::SimpleAtoi(frac, &f)) return Malformed(text);
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    if (w > std::numeric_limits<int64_t>::max() / scale - 1) {
      return Malformed(text);
    }
    Rational r = Rational(w) + Rational(f, scale);
    return negative ? -r : r;
  } catch (const boost::bad_rational&) {
    return Malformed(text);
  }
}

}  // namespace dpabc
