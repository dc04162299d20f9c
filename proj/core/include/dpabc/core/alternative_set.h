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

#ifndef DPABC_CORE_ALTERNATIVE_SET_H_
#define DPABC_CORE_ALTERNATIVE_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dpabc {

// Alternatives are integer indices in [0, m). Sets of alternatives are stored
// as 64-bit masks, so every instance is limited to kMaxAlternatives.
inline constexpr int kMaxAlternatives = 64;

// An immutable set of alternative indices. Used for ballots, committees and
// the commonly-approved cores of cohesive groups.
class AlternativeSet {
 public:
  constexpr AlternativeSet() = default;

  static constexpr AlternativeSet FromBits(uint64_t bits) {
    AlternativeSet s;
    s.bits_ = bits;
    return s;
  }
  static AlternativeSet Of(std::initializer_list<int> members);
  static AlternativeSet Of(const std::vector<int>& members);
  // Alternatives begin, begin+1, ..., end-1.
  static constexpr AlternativeSet Range(int begin, int end) {
    uint64_t bits = 0;
    for (int a = begin; a < end; ++a) bits |= uint64_t{1} << a;
    return FromBits(bits);
  }
  static constexpr AlternativeSet Universe(int m) { return Range(0, m); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int a) const { return (bits_ >> a) & 1u; }
  constexpr bool IsSubsetOf(AlternativeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Largest member index + 1, or 0 for the empty set.
  constexpr int UpperBound() const { return 64 - std::countl_zero(bits_); }

  constexpr AlternativeSet With(int a) const {
    return FromBits(bits_ | (uint64_t{1} << a));
  }
  constexpr AlternativeSet Without(int a) const {
    return FromBits(bits_ & ~(uint64_t{1} << a));
  }

  // Members in ascending order.
  std::vector<int> members() const;

  // "{0,2,3}".
  std::string ToString() const;

  friend constexpr AlternativeSet operator&(AlternativeSet a,
                                            AlternativeSet b) {
    return FromBits(a.bits_ & b.bits_);
  }
  friend constexpr AlternativeSet operator|(AlternativeSet a,
                                            AlternativeSet b) {
    return FromBits(a.bits_ | b.bits_);
  }
  friend constexpr AlternativeSet operator-(AlternativeSet a,
                                            AlternativeSet b) {
    return FromBits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(AlternativeSet a, AlternativeSet b) {
    return a.bits_ == b.bits_;
  }

  template <typename H>
  friend H AbslHashValue(H h, AlternativeSet s) {
    return H::combine(std::move(h), s.bits_);
  }

 private:
  uint64_t bits_ = 0;
};

// Lexicographic order on the ascending member lists. For sets of equal size
// this is the canonical committee order: the set holding the smallest element
// of the symmetric difference comes first.
constexpr bool LexLess(AlternativeSet a, AlternativeSet b) {
  const uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const uint64_t lowest = diff & (~diff + 1);
  const uint64_t at_or_above = ~(lowest - 1);
  // Below `lowest` both lists agree. A list that ends there is a proper
  // prefix and therefore smaller.
  if ((a.bits() & lowest) != 0) {
    return (b.bits() & at_or_above) != 0;
  }
  return (a.bits() & at_or_above) == 0;
}

using Ballot = AlternativeSet;

// A size-k subset of alternatives. Ordered canonically by LexLess.
class Committee {
 public:
  constexpr Committee() = default;
  constexpr explicit Committee(AlternativeSet members) : members_(members) {}
  static Committee Of(std::initializer_list<int> members) {
    return Committee(AlternativeSet::Of(members));
  }

  constexpr AlternativeSet members() const { return members_; }
  constexpr int size() const { return members_.size(); }
  constexpr bool contains(int a) const { return members_.contains(a); }
  std::vector<int> indices() const { return members_.members(); }
  std::string ToString() const { return members_.ToString(); }

  friend constexpr bool operator==(Committee a, Committee b) {
    return a.members_ == b.members_;
  }
  friend constexpr bool operator<(Committee a, Committee b) {
    return LexLess(a.members_, b.members_);
  }

  template <typename H>
  friend H AbslHashValue(H h, Committee c) {
    return H::combine(std::move(h), c.members_);
  }

 private:
  AlternativeSet members_;
};

}  // namespace dpabc

#endif  // DPABC_CORE_ALTERNATIVE_SET_H_
