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

#include "mla/mla.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mla/kernels.hpp"
#include "mla/structure.hpp"

namespace mla {
namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

Violation make_violation(std::string law, std::vector<Elem> witness,
                         std::string detail = {}) {
  return Violation{std::move(law), std::move(witness), std::move(detail)};
}

std::vector<Elem> to_elems(const kernels::Triple& t, std::size_t arity = 3) {
  std::vector<Elem> w;
  for (std::size_t i = 0; i < arity; ++i) w.push_back(static_cast<Elem>(t[i]));
  return w;
}

}  // namespace

FiniteMLA::FiniteMLA(std::size_t order, std::vector<Elem> group_table,
                     std::vector<Elem> star_table, std::vector<std::string> names)
    : n_(order),
      group_(std::move(group_table)),
      star_(std::move(star_table)),
      names_(std::move(names)) {
  if (n_ == 0) throw StructuralError("algebra order must be positive");
  if (group_.size() != n_ * n_) {
    throw StructuralError("group table has " + idx(group_.size()) +
                          " entries, expected " + idx(n_ * n_));
  }
  if (star_.size() != n_ * n_) {
    throw StructuralError("star table has " + idx(star_.size()) +
                          " entries, expected " + idx(n_ * n_));
  }
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    if (group_[i] >= n_) {
      throw StructuralError("group table entry (" + idx(i / n_) + ", " +
                            idx(i % n_) + ") = " + idx(group_[i]) +
                            " out of range");
    }
    if (star_[i] >= n_) {
      throw StructuralError("star table entry (" + idx(i / n_) + ", " +
                            idx(i % n_) + ") = " + idx(star_[i]) +
                            " out of range");
    }
  }
  if (!names_.empty()) {
    if (names_.size() != n_) {
      throw StructuralError("expected " + idx(n_) + " names, got " +
                            idx(names_.size()));
    }
    std::set<std::string> distinct(names_.begin(), names_.end());
    if (distinct.size() != n_) throw StructuralError("element names are not distinct");
  }
  inv_.assign(n_, kNone);
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    }
  }
}

std::string FiniteMLA::name(Elem e) const {
  if (has_names()) return names_[e];
  return idx(e);
}

bool FiniteMLA::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteMLA::has_trivial_star() const {
  return std::all_of(star_.begin(), star_.end(), [](Elem e) { return e == 0; });
}

std::size_t FiniteMLA::element_order(Elem e) const {
  std::size_t k = 1;
  Elem x = e;
  while (x != 0) {
    x = mul(x, e);
    ++k;
    if (k > n_) return 0;  // not a group
  }
  return k;
}

FiniteMLA trivial_star(const FiniteMLA& group) {
  const auto n = group.order();
  return FiniteMLA(n, {group.group_table().begin(), group.group_table().end()},
                   std::vector<Elem>(n * n, 0), group.names());
}

FiniteMLA commutator_star(const FiniteMLA& group) {
  const auto n = group.order();
  std::vector<Elem> star(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) star[a * n + b] = group.comm(a, b);
  return FiniteMLA(n, {group.group_table().begin(), group.group_table().end()},
                   std::move(star), group.names());
}

FiniteMLA with_star(const FiniteMLA& group, std::vector<Elem> star_table) {
  return FiniteMLA(group.order(),
                   {group.group_table().begin(), group.group_table().end()},
                   std::move(star_table), group.names());
}

FiniteMLA with_names(const FiniteMLA& a, std::vector<std::string> names) {
  return FiniteMLA(a.order(), {a.group_table().begin(), a.group_table().end()},
                   {a.star_table().begin(), a.star_table().end()},
                   std::move(names));
}

FiniteMLA trivial_algebra() { return FiniteMLA(1, {0}, {0}, {"1"}); }

// --- homomorphisms ---------------------------------------------------------

MLAHom identity_hom(const MlaPtr& a) {
  MLAHom f{a, a, std::vector<Elem>(a->order())};
  for (Elem x = 0; x < a->order(); ++x) f.map[x] = x;
  return f;
}

MLAHom compose(const MLAHom& outer, const MLAHom& inner) {
  if (inner.target->order() != outer.source->order()) {
    throw StructuralError("cannot compose homomorphisms: carrier sizes differ");
  }
  MLAHom f{inner.source, outer.target, std::vector<Elem>(inner.map.size())};
  for (std::size_t x = 0; x < inner.map.size(); ++x) f.map[x] = outer.map[inner.map[x]];
  return f;
}

bool is_bijective(const MLAHom& f) {
  if (f.source->order() != f.target->order()) return false;
  return image(f).is_full();
}

MLAHom inverse(const MLAHom& f) {
  if (!is_bijective(f)) throw PreconditionError("homomorphism is not bijective");
  MLAHom g{f.target, f.source, std::vector<Elem>(f.map.size())};
  for (std::size_t x = 0; x < f.map.size(); ++x) g.map[f.map[x]] = static_cast<Elem>(x);
  return g;
}

ElemSet image(const MLAHom& f) {
  ElemSet s(f.target->order());
  for (Elem y : f.map) s.insert(y);
  return s;
}

ElemSet image(const MLAHom& f, const ElemSet& s) {
  ElemSet out(f.target->order());
  s.for_each([&](Elem x) { out.insert(f.map[x]); });
  return out;
}

ElemSet kernel(const MLAHom& f) {
  ElemSet s(f.source->order());
  for (std::size_t x = 0; x < f.map.size(); ++x)
    if (f.map[x] == 0) s.insert(static_cast<Elem>(x));
  return s;
}

// --- verification ----------------------------------------------------------

Report verify_group(const FiniteMLA& a, Exec exec) {
  const auto n = a.order();
  std::vector<Elem> seen(n);
  for (Elem r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), kNone);
    for (Elem c = 0; c < n; ++c) {
      const Elem v = a.mul(r, c);
      if (seen[v] != kNone) {
        return Report::fail(make_violation(
            "latin square (row)", {r, seen[v], c},
            "row " + idx(r) + " repeats entry " + idx(v) + " in columns " +
                idx(seen[v]) + " and " + idx(c)));
      }
      seen[v] = c;
    }
  }
  for (Elem c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), kNone);
    for (Elem r = 0; r < n; ++r) {
      const Elem v = a.mul(r, c);
      if (seen[v] != kNone) {
        return Report::fail(make_violation(
            "latin square (column)", {r, c, seen[v]},
            "row " + idx(r) + " repeats entry " + idx(v) + " of row " +
                idx(seen[v]) + " in column " + idx(c)));
      }
      seen[v] = r;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (a.mul(0, x) != x || a.mul(x, 0) != x) {
      return Report::fail(make_violation("identity at 0", {x},
                                         "element 0 does not fix " + idx(x)));
    }
  }
  auto assoc = kernels::first_failure(exec, {n, n, n}, [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto x = static_cast<Elem>(i), y = static_cast<Elem>(j), z = static_cast<Elem>(k);
    return a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z));
  });
  if (assoc) return Report::fail(make_violation("associativity", to_elems(*assoc)));
  for (Elem x = 0; x < n; ++x) {
    if (a.inv(x) == kNone) {
      return Report::fail(make_violation("inverses", {x}, "no two-sided inverse"));
    }
  }
  return Report::pass();
}

Report verify_star_axioms(const FiniteMLA& a, Exec exec) {
  if (auto g = verify_group(a, exec); !g) return g;
  const auto n = a.order();
  for (Elem g = 0; g < n; ++g) {
    if (a.star(g, g) != 0) {
      return Report::fail(make_violation("identity 1", {g}, "g * g != 1"));
    }
  }
  using kernels::Triple;
  auto e = [](std::size_t i) { return static_cast<Elem>(i); };

  // g * (hk) = (g * h) ^h(g * k)
  auto id2 = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Elem g = e(i), h = e(j), x = e(k);
    return a.star(g, a.mul(h, x)) == a.mul(a.star(g, h), a.conj(h, a.star(g, x)));
  };
  // (gh) * k = ^g(h * k) (g * k)
  auto id3 = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Elem g = e(i), h = e(j), x = e(k);
    return a.star(a.mul(g, h), x) == a.mul(a.conj(g, a.star(h, x)), a.star(g, x));
  };
  // ((g*h) * ^h k)((h*k) * ^k g)((k*g) * ^g h) = 1
  auto id4 = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Elem g = e(i), h = e(j), x = e(k);
    const Elem t1 = a.star(a.star(g, h), a.conj(h, x));
    const Elem t2 = a.star(a.star(h, x), a.conj(x, g));
    const Elem t3 = a.star(a.star(x, g), a.conj(g, h));
    return a.mul(a.mul(t1, t2), t3) == 0;
  };
  // ^k(g * h) = ^k g * ^k h
  auto id5 = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Elem g = e(i), h = e(j), x = e(k);
    return a.conj(x, a.star(g, h)) == a.star(a.conj(x, g), a.conj(x, h));
  };

  const kernels::Extents ext{n, n, n};
  if (auto w = kernels::first_failure(exec, ext, id2)) {
    return Report::fail(make_violation("identity 2", to_elems(*w)));
  }
  if (auto w = kernels::first_failure(exec, ext, id3)) {
    return Report::fail(make_violation("identity 3", to_elems(*w)));
  }
  if (auto w = kernels::first_failure(exec, ext, id4)) {
    return Report::fail(make_violation("identity 4", to_elems(*w)));
  }
  if (auto w = kernels::first_failure(exec, ext, id5)) {
    return Report::fail(make_violation("identity 5", to_elems(*w)));
  }
  return Report::pass();
}

Report verify_hom(const MLAHom& f, Exec exec) {
  if (!f.source || !f.target) throw StructuralError("homomorphism without carriers");
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.map.size() != s.order()) {
    throw StructuralError("map has " + idx(f.map.size()) +
                          " entries but the source has order " + idx(s.order()));
  }
  for (std::size_t x = 0; x < f.map.size(); ++x) {
    if (f.map[x] >= t.order()) {
      throw StructuralError("map sends " + idx(x) + " to " + idx(f.map[x]) +
                            ", outside the target");
    }
  }
  if (f.map[0] != 0) {
    return Report::fail(make_violation("identity", {0}, "map(1) != 1"));
  }
  const auto n = s.order();
  auto grp = kernels::first_failure(exec, {n, n, 1}, [&](std::size_t i, std::size_t j, std::size_t) {
    const auto x = static_cast<Elem>(i), y = static_cast<Elem>(j);
    return f.map[s.mul(x, y)] == t.mul(f.map[x], f.map[y]);
  });
  if (grp) {
    return Report::fail(make_violation("group product", to_elems(*grp, 2),
                                       "map(xy) != map(x)map(y)"));
  }
  auto lie = kernels::first_failure(exec, {n, n, 1}, [&](std::size_t i, std::size_t j, std::size_t) {
    const auto x = static_cast<Elem>(i), y = static_cast<Elem>(j);
    return f.map[s.star(x, y)] == t.star(f.map[x], f.map[y]);
  });
  if (lie) {
    return Report::fail(make_violation("lie product", to_elems(*lie, 2),
                                       "map(x * y) != map(x) * map(y)"));
  }
  return Report::pass();
}

// --- constructions ---------------------------------------------------------

Quotient quotient(const MlaPtr& a, const ElemSet& k) {
  if (k.universe() != a->order()) throw StructuralError("ideal is over a different carrier");
  if (auto v = ideal_violation(*a, k)) {
    throw PreconditionError("quotient by a non-ideal: " + v->law + " fails at (" +
                            [&] {
                              std::string s;
                              for (std::size_t i = 0; i < v->witness.size(); ++i)
                                s += (i ? ", " : "") + idx(v->witness[i]);
                              return s;
                            }() + ")");
  }
  const auto n = a->order();
  std::vector<Elem> coset(n, kNone);
  std::vector<Elem> reps;
  for (Elem g = 0; g < n; ++g) {
    if (coset[g] != kNone) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(g);
    k.for_each([&](Elem x) { coset[a->mul(g, x)] = id; });
  }
  const auto m = reps.size();
  std::vector<Elem> grp(m * m), star(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      grp[i * m + j] = coset[a->mul(reps[i], reps[j])];
      star[i * m + j] = coset[a->star(reps[i], reps[j])];
    }
  }
  std::vector<std::string> names;
  if (a->has_names()) {
    for (Elem r : reps) names.push_back(a->name(r));
  }
  auto q = share(FiniteMLA(m, std::move(grp), std::move(star), std::move(names)));
  return Quotient{q, MLAHom{a, q, std::move(coset)}, std::move(reps)};
}

FiniteMLA direct_product(const FiniteMLA& a, const FiniteMLA& b) {
  const auto na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> grp(n * n), star(n * n);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1)
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2) {
          const auto i = x1 * nb + y1, j = x2 * nb + y2;
          grp[i * n + j] = static_cast<Elem>(a.mul(x1, x2) * nb + b.mul(y1, y2));
          star[i * n + j] = static_cast<Elem>(a.star(x1, x2) * nb + b.star(y1, y2));
        }
  std::vector<std::string> names;
  if (a.has_names() || b.has_names()) {
    for (Elem x = 0; x < na; ++x)
      for (Elem y = 0; y < nb; ++y) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  }
  return FiniteMLA(n, std::move(grp), std::move(star), std::move(names));
}

Embedded induced_subalgebra(const MlaPtr& a, const ElemSet& s) {
  if (s.universe() != a->order()) throw StructuralError("subset is over a different carrier");
  if (auto v = subalgebra_violation(*a, s)) {
    throw PreconditionError("not a subalgebra: " + v->law);
  }
  const auto members = s.members();
  const auto m = members.size();
  std::vector<Elem> local(a->order(), kNone);
  for (std::size_t i = 0; i < m; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> grp(m * m), star(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      grp[i * m + j] = local[a->mul(members[i], members[j])];
      star[i * m + j] = local[a->star(members[i], members[j])];
    }
  std::vector<std::string> names;
  if (a->has_names())
    for (Elem x : members) names.push_back(a->name(x));
  auto sub = share(FiniteMLA(m, std::move(grp), std::move(star), std::move(names)));
  return Embedded{sub, MLAHom{sub, a, members}};
}

std::string format_set(const FiniteMLA& a, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    if (!first) out += ", ";
    out += a.name(e);
    first = false;
  });
  return out + "}";
}

}  // namespace mla
