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

#include "mla/elem_set.hpp"

#include <algorithm>
#include <string>

namespace mla {

ElemSet ElemSet::full(std::size_t universe) {
  ElemSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ull;
  if (const std::size_t tail = universe % 64; tail != 0) {
    s.words_.back() = (1ull << tail) - 1;
  }
  return s;
}

ElemSet ElemSet::from(std::size_t universe, std::span<const Elem> members) {
  ElemSet s(universe);
  for (Elem e : members) s.insert(e);
  return s;
}

std::size_t ElemSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElemSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

void ElemSet::insert(Elem e) {
  if (e >= universe_) {
    throw StructuralError("element index " + std::to_string(e) +
                          " outside carrier of size " +
                          std::to_string(universe_));
  }
  words_[e >> 6] |= 1ull << (e & 63);
}

void ElemSet::erase(Elem e) {
  if (e < universe_) words_[e >> 6] &= ~(1ull << (e & 63));
}

void ElemSet::check_universe(const ElemSet& other) const {
  if (universe_ != other.universe_) {
    throw StructuralError("element sets over carriers of different size (" +
                          std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_) + ")");
  }
}

bool ElemSet::subset_of(const ElemSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElemSet& ElemSet::operator&=(const ElemSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElemSet& ElemSet::operator|=(const ElemSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElemSet& ElemSet::operator-=(const ElemSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Elem ElemSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Elem>(w * 64 +
                               static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return kNone;
}

std::vector<Elem> ElemSet::members() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

std::size_t ElemSet::hash() const {
  // FNV-1a over the words.
  std::size_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

bool canonical_less(const ElemSet& a, const ElemSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

void sort_canonical(std::vector<ElemSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

}  // namespace mla
