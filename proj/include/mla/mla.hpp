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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mla/elem_set.hpp"
#include "mla/types.hpp"

namespace mla {

/// A finite multiplicative Lie algebra given by its two Cayley tables.
///
/// Elements are the indices 0..n-1 and element 0 is the group identity. Both
/// tables are row-major: entry (i, j) is at i * n + j. Construction checks
/// only shape and index ranges; the group and Lie-product axioms are checked
/// by `verify_group` and `verify_star_axioms`.
class FiniteMLA {
 public:
  FiniteMLA(std::size_t order, std::vector<Elem> group_table,
            std::vector<Elem> star_table, std::vector<std::string> names = {});

  std::size_t order() const { return n_; }

  Elem mul(Elem a, Elem b) const { return group_[a * n_ + b]; }
  Elem star(Elem a, Elem b) const { return star_[a * n_ + b]; }
  /// Two-sided inverse; kNone when the table is not a group.
  Elem inv(Elem a) const { return inv_[a]; }
  /// ghg^-1
  Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }
  /// [a, b] = a b a^-1 b^-1
  Elem comm(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  std::span<const Elem> group_table() const { return group_; }
  std::span<const Elem> star_table() const { return star_; }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Display name of e; the decimal index when no names are set.
  std::string name(Elem e) const;

  bool is_abelian() const;
  bool has_trivial_star() const;
  /// Element order in the underlying group (requires a valid group table).
  std::size_t element_order(Elem e) const;

  /// Same carrier and tables; names are display-only and not compared.
  friend bool operator==(const FiniteMLA& a, const FiniteMLA& b) {
    return a.n_ == b.n_ && a.group_ == b.group_ && a.star_ == b.star_;
  }

 private:
  std::size_t n_;
  std::vector<Elem> group_;
  std::vector<Elem> star_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
};

using MlaPtr = std::shared_ptr<const FiniteMLA>;

inline MlaPtr share(FiniteMLA a) {
  return std::make_shared<const FiniteMLA>(std::move(a));
}

/// The same group with the Lie product a * b = 1.
FiniteMLA trivial_star(const FiniteMLA& group);
/// The same group with the Lie product a * b = [a, b].
FiniteMLA commutator_star(const FiniteMLA& group);
/// The same group with a replacement Lie-product table.
FiniteMLA with_star(const FiniteMLA& group, std::vector<Elem> star_table);
FiniteMLA with_names(const FiniteMLA& a, std::vector<std::string> names);

/// The order-1 algebra.
FiniteMLA trivial_algebra();

/// Homomorphism of multiplicative Lie algebras, stored as an element map.
struct MLAHom {
  MlaPtr source;
  MlaPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
};

MLAHom identity_hom(const MlaPtr& a);
MLAHom compose(const MLAHom& outer, const MLAHom& inner);
/// Inverse of a bijective hom; throws PreconditionError otherwise.
MLAHom inverse(const MLAHom& f);
ElemSet image(const MLAHom& f);
ElemSet image(const MLAHom& f, const ElemSet& s);
ElemSet kernel(const MLAHom& f);
bool is_bijective(const MLAHom& f);

/// Latin square, identity at 0, associativity, inverses. Witnesses for the
/// Latin square are (row, column, earlier row) or (row, earlier column,
/// column); for associativity the least triple (a, b, c).
Report verify_group(const FiniteMLA& a, Exec exec = Exec::parallel);

/// The five defining identities over all element triples. On failure the
/// law is "identity k" for the least k and the witness is the
/// lexicographically least (g) or (g, h, k). Runs verify_group first.
Report verify_star_axioms(const FiniteMLA& a, Exec exec = Exec::parallel);

/// Preservation of both products. Throws StructuralError on size mismatch.
Report verify_hom(const MLAHom& f, Exec exec = Exec::parallel);

struct Quotient {
  MlaPtr algebra;
  MLAHom projection;
  /// Least member of each coset, in coset order.
  std::vector<Elem> representatives;
};

/// Coset algebra A/K; cosets ordered by least member. Throws
/// PreconditionError naming the closure failure when K is not an ideal.
Quotient quotient(const MlaPtr& a, const ElemSet& k);

/// Componentwise product; (a, b) has index a * |B| + b.
FiniteMLA direct_product(const FiniteMLA& a, const FiniteMLA& b);

struct Embedded {
  MlaPtr algebra;
  /// Inclusion into the parent algebra; member order is ascending index.
  MLAHom embedding;
};

/// The subalgebra S as an algebra in its own right. Throws
/// PreconditionError if S is not a subalgebra.
Embedded induced_subalgebra(const MlaPtr& a, const ElemSet& s);

/// Display helper: "{1, a, b}" using element names.
std::string format_set(const FiniteMLA& a, const ElemSet& s);

}  // namespace mla
