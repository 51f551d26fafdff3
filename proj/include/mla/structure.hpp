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

// Closures, subalgebra lattices, centers, commutators, central series,
// Frattini subalgebra and multiplicative normalizers.

#pragma once

#include <optional>
#include <vector>

#include "mla/elem_set.hpp"
#include "mla/mla.hpp"

namespace mla {

/// Size limits for the exhaustive computations.
struct Limits {
  std::size_t lattice_bound = 24;      // all_subalgebras and everything above it
  std::size_t enumeration_bound = 12;  // enumerate_stars, build_catalog

  /// Defaults, overridden by MLA_MAX_ORDER when set (applies to both).
  static Limits from_env();
};

ElemSet gen_subgroup(const FiniteMLA& a, const ElemSet& s);
/// Least subalgebra containing S and the identity.
ElemSet gen_subalgebra(const FiniteMLA& a, const ElemSet& s);
/// Least ideal containing S: additionally closed under conjugation by A and
/// under g * h for g in A, h in the set.
ElemSet gen_ideal(const FiniteMLA& a, const ElemSet& s);
/// Least normal subgroup containing S.
ElemSet normal_closure(const FiniteMLA& a, const ElemSet& s);

std::optional<Violation> subalgebra_violation(const FiniteMLA& a, const ElemSet& s);
std::optional<Violation> ideal_violation(const FiniteMLA& a, const ElemSet& s);
bool is_subgroup(const FiniteMLA& a, const ElemSet& s);
bool is_subalgebra(const FiniteMLA& a, const ElemSet& s);
bool is_ideal(const FiniteMLA& a, const ElemSet& s);

/// Every subalgebra, sorted canonically. Throws BoundExceeded above the
/// lattice bound.
std::vector<ElemSet> all_subalgebras(const FiniteMLA& a, const Limits& limits = {});
std::vector<ElemSet> maximal_subalgebras(const FiniteMLA& a, const Limits& limits = {});

/// Members of `lattice` that are maximal among those strictly inside `top`.
std::vector<ElemSet> maximal_below(const std::vector<ElemSet>& lattice,
                                   const ElemSet& top);
/// Frattini subalgebra of the subalgebra `top`, read off the lattice of the
/// parent (the subalgebras of `top` are exactly the lattice members inside it).
ElemSet frattini_within(const std::vector<ElemSet>& lattice, const ElemSet& top);

ElemSet frattini(const FiniteMLA& a, const Limits& limits = {});
/// Non-generators via the maximal-subalgebra characterization.
ElemSet non_generators(const FiniteMLA& a, const Limits& limits = {});
/// Non-generators straight from the definition, scanning every generating
/// subset. Exponential; refuses above order 16.
ElemSet non_generators_by_definition(const FiniteMLA& a);

struct Centers {
  ElemSet group;           // Z(G)
  ElemSet lie;             // LZ(G)
  ElemSet multiplicative;  // Z(G) ∩ LZ(G)
};

Centers centers(const FiniteMLA& a);

/// ^M[G, H]: ideal generated by all [g, h] and g' * h'. H must be an ideal.
ElemSet pair_commutator(const FiniteMLA& a, const ElemSet& h);
/// Z(G, H) = { h in H : [g, h] = 1 and g * h = 1 for all g }.
ElemSet pair_center(const FiniteMLA& a, const ElemSet& h);
/// Normal subgroup generated by the plain group commutators [g, h].
ElemSet group_commutator(const FiniteMLA& a, const ElemSet& h);

struct SeriesResult {
  std::vector<ElemSet> terms;
  bool stabilized = false;
  std::optional<std::size_t> class_index;
};

/// M_0 = G, M_{i+1} = ^M[G, M_i]. class_index is the first i with M_i = {1}.
SeriesResult lower_central_series(const FiniteMLA& a);
/// M_1 = ^M[G, G], M_{i+1} = [G, M_i] using the plain group bracket.
SeriesResult lower_central_series_plain(const FiniteMLA& a);
std::optional<std::size_t> nilpotency_class(const FiniteMLA& a);

/// Z_0 = {1}, Z_{i+1} = preimage of the multiplicative center of A / Z_i.
SeriesResult upper_central_series(const FiniteMLA& a);

/// { g : g H g^-1 = H and g * H ⊆ H }. H must be a subalgebra.
ElemSet normalizer(const FiniteMLA& a, const ElemSet& h);
/// N^0 = H, N^{i+1} = normalizer(N^i); class_index = first i with N^i = A.
SeriesResult normalizer_tower(const FiniteMLA& a, const ElemSet& h);

/// True iff every proper subalgebra is strictly inside its normalizer.
bool satisfies_normalizer_condition(const FiniteMLA& a, const Limits& limits = {});

/// Evaluates the structural statements about normalizers, the Frattini
/// subalgebra and nilpotent algebras on A, quantifying over every
/// subalgebra and ideal where the statement does.
CheckList structure_report(const FiniteMLA& a, const Limits& limits = {});

}  // namespace mla
