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

#include "dpabc/instances/witness.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace dpabc {
namespace {

// Construction output before validation into Instances.
struct Draft {
  std::vector<Ballot> ballots;
  std::optional<std::vector<Ballot>> companion;
  std::vector<std::pair<std::string, Committee>> tagged;
  std::vector<AliasBlock> aliases;
  std::vector<Committee> chain;
  std::vector<std::vector<int>> chain_overlaps;
};

absl::Status Require(bool ok, WitnessId id, const WitnessParams& p,
                     absl::string_view condition) {
  if (ok) return absl::OkStatus();
  return absl::InvalidArgumentError(
      absl::StrFormat("%s requires %s (got n=%d, k=%d, m=%d)", WitnessName(id),
                      condition, p.n, p.k, p.m));
}

Committee C(AlternativeSet s) { return Committee(s); }

AlternativeSet Block(int first, int last_exclusive) {
  return AlternativeSet::Range(first, last_exclusive);
}

std::vector<AliasBlock> PlainAliases(int m) { return {{"a", 0, m}}; }

// s = ceil(n/k); voters 0..s-1 approve a_1, s..2s-2 approve a_2, the rest
// approve A - {a_1, a_2}. The companion moves voter s-1 to a_2.
absl::StatusOr<Draft> JrUpper(const WitnessParams& p) {
  const WitnessId id = WitnessId::kJrUpper;
  const int s = CeilDiv(p.n, p.k);
  if (auto st = Require(p.k >= 2, id, p, "k >= 2"); !st.ok()) return st;
  if (auto st = Require(p.m >= p.k + 1, id, p, "m >= k + 1"); !st.ok()) return st;
  if (auto st = Require(2 * s - 1 <= p.n, id, p, "2*ceil(n/k) - 1 <= n");
      !st.ok()) {
    return st;
  }
  const AlternativeSet rest = Block(2, p.m);
  Draft d;
  for (int j = 0; j < p.n; ++j) {
    if (j < s) {
      d.ballots.push_back(AlternativeSet::Of({0}));
    } else if (j < 2 * s - 1) {
      d.ballots.push_back(AlternativeSet::Of({1}));
    } else {
      d.ballots.push_back(rest);
    }
  }
  d.companion = d.ballots;
  (*d.companion)[s - 1] = AlternativeSet::Of({1});
  d.tagged = {{"W", C(Block(2, p.k + 1).With(0))},
              {"W_prime", C(Block(2, p.k + 1).With(1))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

// n = s*k. Voter 0 approves {a_1, a_{k+1}}, voters 1..s-1 approve a_1, block
// t (voters t*s..(t+1)*s-1) approves a_{t+1}. The companion gives voter 0
// {a_1, a_{k+2}}. The last block is indexed by the voter count n.
absl::StatusOr<Draft> PjrUpper(const WitnessParams& p) {
  const WitnessId id = WitnessId::kPjrUpper;
  if (auto st = Require(p.k >= 2, id, p, "k >= 2"); !st.ok()) return st;
  if (auto st = Require(p.n % p.k == 0, id, p, "n = s*k"); !st.ok()) return st;
  if (auto st = Require(p.m >= p.k + 2, id, p, "m >= k + 2"); !st.ok()) {
    return st;
  }
  const int s = p.n / p.k;
  Draft d;
  for (int j = 0; j < p.n; ++j) d.ballots.push_back(AlternativeSet::Of({j / s}));
  d.companion = d.ballots;
  d.ballots[0] = AlternativeSet::Of({0, p.k});
  (*d.companion)[0] = AlternativeSet::Of({0, p.k + 1});
  d.tagged = {{"W", C(Block(1, p.k + 1))},
              {"W_prime", C(Block(1, p.k).With(p.k + 1))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

// n = s*k; block t approves a_{t+1}. The companion moves block 0 to a_{k+1}.
absl::StatusOr<Draft> EjrUpper(const WitnessParams& p) {
  const WitnessId id = WitnessId::kEjrUpper;
  if (auto st = Require(p.n % p.k == 0, id, p, "n = s*k"); !st.ok()) return st;
  if (auto st = Require(p.m >= p.k + 1, id, p, "m >= k + 1"); !st.ok()) {
    return st;
  }
  const int s = p.n / p.k;
  Draft d;
  for (int j = 0; j < p.n; ++j) d.ballots.push_back(AlternativeSet::Of({j / s}));
  d.companion = d.ballots;
  for (int j = 0; j < s; ++j) (*d.companion)[j] = AlternativeSet::Of({p.k});
  d.tagged = {{"W", C(Block(0, p.k))},
              {"W_prime", C(Block(1, p.k).With(p.k))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

// a_1..a_k -> 0..k-1, b_1..b_{n-1} -> k..k+n-2, c_1..c_k -> k+n-1..n+2k-2.
// Voter j (0-based) approves a_1..a_k and b_1..b_j.
absl::StatusOr<Draft> PeChain(const WitnessParams& p) {
  const WitnessId id = WitnessId::kPeChain;
  if (auto st = Require(p.m >= p.n + 2 * p.k - 1, id, p, "m >= n + 2k - 1");
      !st.ok()) {
    return st;
  }
  const int k = p.k;
  const int n = p.n;
  const int b0 = k;
  const int c0 = k + n - 1;
  Draft d;
  for (int j = 0; j < n; ++j) d.ballots.push_back(Block(0, k) | Block(b0, b0 + j));
  d.aliases = {{"a", 0, k}, {"b", b0, n - 1}, {"c", c0, k}};
  if (p.m > n + 2 * k - 1) d.aliases.push_back({"d", n + 2 * k - 1, p.m - (n + 2 * k - 1)});
  for (int row = 1; row <= k; ++row) {
    for (int col = 1; col <= n; ++col) {
      // W_{p,q}: a_1..a_{k-p+1} (q = 1) or a_1..a_{k-p} + b_{q-1}, plus
      // c_1..c_{p-1}.
      AlternativeSet w = Block(c0, c0 + row - 1);
      if (col == 1) {
        w = w | Block(0, k - row + 1);
      } else {
        w = w | Block(0, k - row);
        w = w.With(b0 + col - 2);
      }
      d.tagged.emplace_back(absl::StrCat("W_{", row, ",", col, "}"), C(w));
      d.chain.push_back(C(w));
      // Table of overlaps: q-1 entries k-p, then n-q+1 entries k-p+1.
      std::vector<int> omega(col - 1, k - row);
      omega.resize(n, k - row + 1);
      d.chain_overlaps.push_back(std::move(omega));
    }
  }
  const Committee last = C(Block(c0, c0 + k));
  d.tagged.emplace_back(absl::StrCat("W_{", k + 1, ",1}"), last);
  d.chain.push_back(last);
  d.chain_overlaps.emplace_back(n, 0);
  return d;
}

// n = 2t + 1, Wbar = {a_3..a_{k+1}}. The first t+1 voters approve
// Wbar + a_1, the rest Wbar + a_2. The companion moves voter t to Wbar + a_2.
absl::StatusOr<Draft> CcUpper(const WitnessParams& p) {
  const WitnessId id = WitnessId::kCcUpper;
  if (auto st = Require(p.n % 2 == 1, id, p, "odd n = 2t + 1"); !st.ok()) {
    return st;
  }
  if (auto st = Require(p.m >= p.k + 1, id, p, "m >= k + 1"); !st.ok()) {
    return st;
  }
  const int t = p.n / 2;
  const AlternativeSet wbar = Block(2, p.k + 1);
  Draft d;
  for (int j = 0; j < p.n; ++j) d.ballots.push_back(wbar.With(j <= t ? 0 : 1));
  d.companion = d.ballots;
  (*d.companion)[t] = wbar.With(1);
  d.tagged = {{"W_c", C(wbar.With(0))}, {"W_c_prime", C(wbar.With(1))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

// s = ceil(2n/k). Voters 0..s-1 approve {a_1,a_2}, s..2s-2 {a_1,a_3},
// 2s-1..3s-2 {a_4,a_5}, the rest {a_4}. The companion moves voter s-1 to
// {a_1,a_3}.
absl::StatusOr<Draft> JrPjr3Way(const WitnessParams& p) {
  const WitnessId id = WitnessId::kJrPjr3Way;
  const int s = CeilDiv(2 * p.n, p.k);
  if (auto st = Require(p.k >= 4, id, p, "k >= 4"); !st.ok()) return st;
  if (auto st = Require(p.m >= p.k + 3, id, p, "m >= k + 3"); !st.ok()) {
    return st;
  }
  if (auto st = Require(p.n >= 3 * s - 1, id, p, "n >= 3*ceil(2n/k) - 1");
      !st.ok()) {
    return st;
  }
  Draft d;
  for (int j = 0; j < p.n; ++j) {
    if (j < s) {
      d.ballots.push_back(AlternativeSet::Of({0, 1}));
    } else if (j < 2 * s - 1) {
      d.ballots.push_back(AlternativeSet::Of({0, 2}));
    } else if (j < 3 * s - 1) {
      d.ballots.push_back(AlternativeSet::Of({3, 4}));
    } else {
      d.ballots.push_back(AlternativeSet::Of({3}));
    }
  }
  d.companion = d.ballots;
  (*d.companion)[s - 1] = AlternativeSet::Of({0, 2});
  const AlternativeSet tail = Block(5, p.k + 1);
  d.tagged = {{"W_0", C(Block(5, p.k + 3).With(0).With(3))},
              {"W_1", C(tail | AlternativeSet::Of({0, 1, 3, 4}))},
              {"W_1_prime", C(tail | AlternativeSet::Of({0, 2, 3, 4}))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

// s = ceil(n/k). Block t approves a_1..a_k plus a_{k+t+1}. The companion
// gives block 0 {a_{k+1}, a_{2k+1}, ..., a_{3k-1}}.
absl::StatusOr<Draft> PjrEjr3Way(const WitnessParams& p) {
  const WitnessId id = WitnessId::kPjrEjr3Way;
  const int s = CeilDiv(p.n, p.k);
  if (auto st = Require(p.k >= 3, id, p, "k >= 3"); !st.ok()) return st;
  if (auto st = Require(p.m >= 3 * p.k - 1, id, p, "m >= 3k - 1"); !st.ok()) {
    return st;
  }
  if (auto st = Require((p.k - 1) * s < p.n, id, p,
                        "(k-1)*ceil(n/k) < n, so every block is non-empty");
      !st.ok()) {
    return st;
  }
  const AlternativeSet common = Block(0, p.k);
  Draft d;
  for (int j = 0; j < p.n; ++j) d.ballots.push_back(common.With(p.k + j / s));
  d.companion = d.ballots;
  for (int j = 0; j < s; ++j) {
    (*d.companion)[j] = Block(2 * p.k, 3 * p.k - 1).With(p.k);
  }
  d.tagged = {{"W_0", C(Block(p.k, 2 * p.k))},
              {"W_1", C(common)},
              {"W_1_prime", C(Block(0, p.k - 1).With(2 * p.k))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

// k groups of n/k voters; group t approves a_{t+1} and a_{k+1}..a_{2k}.
absl::StatusOr<Draft> Fig3Divergence(const WitnessParams& p) {
  const WitnessId id = WitnessId::kFig3Divergence;
  if (auto st = Require(p.k >= 2, id, p, "k >= 2"); !st.ok()) return st;
  if (auto st = Require(p.n % p.k == 0, id, p, "k divides n"); !st.ok()) {
    return st;
  }
  if (auto st = Require(p.m >= 2 * p.k, id, p, "m >= 2k"); !st.ok()) return st;
  const int size = p.n / p.k;
  const AlternativeSet shared = Block(p.k, 2 * p.k);
  Draft d;
  for (int j = 0; j < p.n; ++j) d.ballots.push_back(shared.With(j / size));
  d.tagged = {{"W_1", C(shared)}, {"W_2", C(Block(0, p.k))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

// n = 2t + 1. The first t+1 voters approve a_1..a_k, the rest a_{k+1}..a_{2k}.
absl::StatusOr<Draft> CcJrIncompat(const WitnessParams& p) {
  const WitnessId id = WitnessId::kCcJrIncompat;
  if (auto st = Require(p.n % 2 == 1, id, p, "odd n = 2t + 1"); !st.ok()) {
    return st;
  }
  if (auto st = Require(p.k >= 3, id, p, "k >= 3"); !st.ok()) return st;
  if (auto st = Require(p.m >= 2 * p.k, id, p, "m >= 2k"); !st.ok()) return st;
  const int t = p.n / 2;
  Draft d;
  for (int j = 0; j < p.n; ++j) {
    d.ballots.push_back(j <= t ? Block(0, p.k) : Block(p.k, 2 * p.k));
  }
  d.tagged = {{"W_c", C(Block(0, p.k))},
              {"W_jr", C(Block(0, p.k - 1).With(p.k))}};
  d.aliases = PlainAliases(p.m);
  return d;
}

absl::StatusOr<Draft> Build(WitnessId id, const WitnessParams& p) {
  switch (id) {
    case WitnessId::kJrUpper:
      return JrUpper(p);
    case WitnessId::kPjrUpper:
      return PjrUpper(p);
    case WitnessId::kEjrUpper:
      return EjrUpper(p);
    case WitnessId::kPeChain:
      return PeChain(p);
    case WitnessId::kCcUpper:
      return CcUpper(p);
    case WitnessId::kJrPjr3Way:
      return JrPjr3Way(p);
    case WitnessId::kPjrEjr3Way:
      return PjrEjr3Way(p);
    case WitnessId::kFig3Divergence:
      return Fig3Divergence(p);
    case WitnessId::kCcJrIncompat:
      return CcJrIncompat(p);
  }
  return absl::InvalidArgumentError("unknown witness id");
}

}  // namespace

absl::string_view WitnessName(WitnessId id) {
  switch (id) {
    case WitnessId::kJrUpper:
      return "JR_UPPER";
    case WitnessId::kPjrUpper:
      return "PJR_UPPER";
    case WitnessId::kEjrUpper:
      return "EJR_UPPER";
    case WitnessId::kPeChain:
      return "PE_CHAIN";
    case WitnessId::kCcUpper:
      return "CC_UPPER";
    case WitnessId::kJrPjr3Way:
      return "JR_PJR_3WAY";
    case WitnessId::kPjrEjr3Way:
      return "PJR_EJR_3WAY";
    case WitnessId::kFig3Divergence:
      return "FIG3_DIVERGENCE";
    case WitnessId::kCcJrIncompat:
      return "CC_JR_INCOMPAT";
  }
  return "?";
}

absl::StatusOr<WitnessId> ParseWitnessId(absl::string_view name) {
  const std::string upper = absl::AsciiStrToUpper(name);
  std::vector<absl::string_view> names;
  for (WitnessId id : kAllWitnesses) {
    if (upper == WitnessName(id)) return id;
    names.push_back(WitnessName(id));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown witness '", name, "'; valid ids: ", absl::StrJoin(names, ", ")));
}

WitnessParams DefaultParams(WitnessId id) {
  switch (id) {
    case WitnessId::kJrUpper:
    case WitnessId::kPjrUpper:
    case WitnessId::kEjrUpper:
    case WitnessId::kFig3Divergence:
      return {4, 2, 4};
    case WitnessId::kPeChain:
      return {2, 2, 5};
    case WitnessId::kCcUpper:
      return {3, 2, 4};
    case WitnessId::kJrPjr3Way:
      return {5, 5, 8};
    case WitnessId::kPjrEjr3Way:
      return {3, 3, 8};
    case WitnessId::kCcJrIncompat:
      return {3, 3, 6};
  }
  return {0, 0, 0};
}

std::optional<Committee> WitnessInstance::Tagged(absl::string_view name) const {
  for (const auto& [tag, committee] : tagged) {
    if (tag == name) return committee;
  }
  return std::nullopt;
}

std::vector<Instance> WitnessInstance::Family() const {
  std::vector<Instance> out = {instance};
  if (companion.has_value()) out.push_back(*companion);
  return out;
}

absl::StatusOr<WitnessInstance> MakeWitness(WitnessId id,
                                            const WitnessParams& params) {
  if (params.n < 1 || params.k < 1 || params.m < params.k) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s: need n >= 1 and 1 <= k <= m (got n=%d, k=%d, m=%d)",
        WitnessName(id), params.n, params.k, params.m));
  }
  if (params.m > kMaxAlternatives) {
    return absl::InvalidArgumentError(
        absl::StrCat("m is limited to ", kMaxAlternatives));
  }
  absl::StatusOr<Draft> draft = Build(id, params);
  if (!draft.ok()) return draft.status();
  absl::StatusOr<Instance> inst =
      Instance::Create(std::move(draft->ballots), params.m, params.k);
  if (!inst.ok()) return inst.status();
  std::optional<Instance> companion;
  if (draft->companion.has_value()) {
    absl::StatusOr<Instance> c =
        Instance::Create(std::move(*draft->companion), params.m, params.k);
    if (!c.ok()) return c.status();
    companion = *std::move(c);
  }
  return WitnessInstance{id,
                         params,
                         *std::move(inst),
                         std::move(companion),
                         std::move(draft->tagged),
                         std::move(draft->aliases),
                         std::move(draft->chain),
                         std::move(draft->chain_overlaps)};
}

absl::StatusOr<WitnessInstance> MakeWitness(WitnessId id) {
  return MakeWitness(id, DefaultParams(id));
}

std::string FormatSidecar(const WitnessInstance& w) {
  std::string out =
      absl::StrFormat("# witness %s n=%d k=%d m=%d\n", WitnessName(w.id),
                      w.params.n, w.params.k, w.params.m);
  for (const AliasBlock& a : w.aliases) {
    absl::StrAppend(&out, "alias ", a.symbol, " ", a.first, " ", a.count, "\n");
  }
  for (const auto& [name, committee] : w.tagged) {
    absl::StrAppend(&out, "committee ", name, " ",
                    absl::StrJoin(committee.indices(), " "), "\n");
  }
  return out;
}

}  // namespace dpabc
