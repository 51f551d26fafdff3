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

// Pinned Cayley tables for the built-in groups. Every group is returned as
// an algebra with the trivial Lie product.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mla/mla.hpp"

namespace mla {

struct NamedGroup {
  std::string name;
  FiniteMLA group;
};

/// Z_n; element i is g^i.
FiniteMLA cyclic_group(std::size_t n);
/// V4 = Z2 x Z2 with elements 1, a, b, ab.
FiniteMLA klein_four();
/// Dihedral group of order 2m, <a, b : b^m = a^2 = 1, ab = b^-1 a>;
/// b^i a^j has index j * m + i.
FiniteMLA dihedral_group(std::size_t m);
/// Q8 with elements 1, i, -1, -i, j, k, -j, -k.
FiniteMLA quaternion_group();
/// Dicyclic group of order 4m, <a, x : a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>.
FiniteMLA dicyclic_group(std::size_t m);
/// Permutations of k points in cycle notation, ordered by element order and
/// then by name. The product p q applies q first.
FiniteMLA symmetric_group(std::size_t k);
FiniteMLA alternating_group(std::size_t k);
/// Direct product of groups, named componentwise.
FiniteMLA group_product(const FiniteMLA& a, const FiniteMLA& b);

/// Every group of order <= min(max_order, 12), one table per isomorphism
/// class, in order of group order.
std::vector<NamedGroup> builtin_groups(std::size_t max_order);

/// Lookup by the names used in builtin_groups, plus S4, A4, A5, S5.
std::optional<FiniteMLA> builtin_group(std::string_view name);

}  // namespace mla
