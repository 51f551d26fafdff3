// Copyright 2026 The mlalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "mla/types.hpp"

namespace mla {

/// Subset of a carrier {0, ..., n-1}, stored as a packed bit vector.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  ElemSet(std::size_t universe, std::initializer_list<Elem> members)
      : ElemSet(universe) {
    for (Elem e : members) insert(e);
  }

  static ElemSet full(std::size_t universe);
  static ElemSet singleton(std::size_t universe, Elem e) {
    return ElemSet(universe, {e});
  }
  static ElemSet from(std::size_t universe, std::span<const Elem> members);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == universe_; }

  bool contains(Elem e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
  }
  void insert(Elem e);
  void erase(Elem e);

  bool subset_of(const ElemSet& other) const;
  bool proper_subset_of(const ElemSet& other) const {
    return subset_of(other) && count() < other.count();
  }

  ElemSet& operator&=(const ElemSet& other);
  ElemSet& operator|=(const ElemSet& other);
  ElemSet& operator-=(const ElemSet& other);
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  /// Least member, or kNone when empty.
  Elem first() const;
  std::vector<Elem> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

 private:
  void check_universe(const ElemSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical ordering for returned lists: by size, then by the sorted member
/// sequence compared lexicographically.
bool canonical_less(const ElemSet& a, const ElemSet& b);

void sort_canonical(std::vector<ElemSet>& sets);

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace mla
