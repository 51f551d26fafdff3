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

// Lie products on a fixed group, isomorphism search and the catalog of
// small multiplicative Lie algebras.

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mla/mla.hpp"
#include "mla/structure.hpp"

namespace mla {

/// Entries (i, j, k) meaning i * j = k.
struct StarConstraint {
  std::vector<std::array<Elem, 3>> pairs;
};

/// Greedy generating sequence: repeatedly adjoin the element that enlarges
/// the generated subgroup most, least index on ties.
std::vector<Elem> generating_sequence(const FiniteMLA& group);

/// Every Lie product on the group of `group` satisfying the five identities,
/// sorted by star table. The star table of the input is ignored. Throws
/// BoundExceeded above the enumeration bound.
std::vector<FiniteMLA> enumerate_stars(const FiniteMLA& group, const Limits& limits = {});

struct Completion {
  std::vector<FiniteMLA> algebras;
  /// Empty when completions exist; otherwise why there are none.
  std::string explanation;
};

/// The Lie products of enumerate_stars that satisfy every constraint.
Completion complete_partial_star(const FiniteMLA& group, const StarConstraint& c,
                                 const Limits& limits = {});

/// Calls visit on every isomorphism A -> B in deterministic order until it
/// returns false. Returns false if visiting was stopped.
bool for_each_isomorphism(const MlaPtr& a, const MlaPtr& b,
                          const std::function<bool(const MLAHom&)>& visit);
std::vector<MLAHom> find_isomorphisms(const MlaPtr& a, const MlaPtr& b);
std::optional<MLAHom> find_isomorphism(const MlaPtr& a, const MlaPtr& b);

/// Group automorphisms of the underlying group (the Lie product is ignored).
std::vector<MLAHom> group_automorphisms(const FiniteMLA& group);

/// Lexicographically least star table among the images of A under the
/// automorphisms of its group.
std::vector<Elem> canonical_star(const FiniteMLA& a, const std::vector<MLAHom>& autos);

/// One algebra per isomorphism class of Lie products on the group, each
/// given by its canonical star table, sorted by that table.
std::vector<FiniteMLA> stars_up_to_isomorphism(const FiniteMLA& group,
                                               const Limits& limits = {});

struct CatalogEntry {
  std::string group_name;
  std::string file_stem;  // e.g. "D4_0"
  FiniteMLA algebra;
  std::optional<std::size_t> nilpotency_class;
  bool perfect = false;  // ^M[G, G] = G
  ElemSet frattini;
  Centers centers;
  bool report_passed = false;
};

/// Every built-in group of order <= max_order with all of its Lie
/// products up to isomorphism, annotated. max_order is capped by the
/// enumeration bound.
std::vector<CatalogEntry> build_catalog(std::size_t max_order, const Limits& limits = {});

/// One line of the catalog index: file, group, order and the annotations.
std::string catalog_index_line(const CatalogEntry& e);

}  // namespace mla
