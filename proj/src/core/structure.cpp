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

#include "mla/structure.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mla {
namespace {

struct ClosureRules {
  bool star = false;          // x * y among members
  bool conjugate = false;     // g x g^-1 for all g in A
  bool absorb = false;        // g * x for all g in A
};

ElemSet close(const FiniteMLA& a, ElemSet set, ClosureRules rules) {
  set.insert(0);
  std::vector<Elem> members = set.members();
  std::deque<Elem> pending(members.begin(), members.end());
  auto add = [&](Elem v) {
    if (!set.contains(v)) {
      set.insert(v);
      members.push_back(v);
      pending.push_back(v);
    }
  };
  const auto n = static_cast<Elem>(a.order());
  while (!pending.empty()) {
    const Elem x = pending.front();
    pending.pop_front();
    add(a.inv(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Elem y = members[i];
      add(a.mul(x, y));
      add(a.mul(y, x));
      if (rules.star) {
        add(a.star(x, y));
        add(a.star(y, x));
      }
    }
    if (rules.conjugate)
      for (Elem g = 0; g < n; ++g) add(a.conj(g, x));
    if (rules.absorb)
      for (Elem g = 0; g < n; ++g) add(a.star(g, x));
  }
  return set;
}

void require_carrier(const FiniteMLA& a, const ElemSet& s) {
  if (s.universe() != a.order()) {
    throw StructuralError("element set over a carrier of size " +
                          std::to_string(s.universe()) + ", expected " +
                          std::to_string(a.order()));
  }
}

void require_ideal(const FiniteMLA& a, const ElemSet& h, const char* op) {
  require_carrier(a, h);
  if (auto v = ideal_violation(a, h)) {
    throw PreconditionError(std::string(op) + ": argument is not an ideal (" +
                            v->law + ")");
  }
}

void require_bound(const FiniteMLA& a, const Limits& limits) {
  if (a.order() > limits.lattice_bound) {
    throw BoundExceeded("subalgebra lattice of an algebra of order " +
                        std::to_string(a.order()) + " exceeds the bound " +
                        std::to_string(limits.lattice_bound));
  }
}

ElemSet non_generators_from(const FiniteMLA& a, const std::vector<ElemSet>& lattice) {
  const auto full = ElemSet::full(a.order());
  ElemSet result = full;
  for (const auto& m : maximal_below(lattice, full)) {
    (full - m).for_each([&](Elem g) {
      // X = M ∪ {g} generates A while X \ {g} = M does not.
      ElemSet x = m;
      x.insert(g);
      if (gen_subalgebra(a, x) != full) {
        throw std::logic_error("maximal subalgebra plus an outside element does not generate");
      }
      result.erase(g);
    });
  }
  return result;
}

std::string witness_detail(const FiniteMLA& a, const char* label, const ElemSet& s) {
  return std::string(label) + " " + format_set(a, s);
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  if (const char* v = std::getenv("MLA_MAX_ORDER"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const auto parsed = std::strtoull(v, &end, 10);
    if (end != nullptr && *end == '\0' && parsed > 0) {
      l.lattice_bound = parsed;
      l.enumeration_bound = parsed;
    }
  }
  return l;
}

// --- closures ----------------------------------------------------------------

ElemSet gen_subgroup(const FiniteMLA& a, const ElemSet& s) {
  require_carrier(a, s);
  return close(a, s, {});
}

ElemSet gen_subalgebra(const FiniteMLA& a, const ElemSet& s) {
  require_carrier(a, s);
  return close(a, s, {.star = true});
}

ElemSet gen_ideal(const FiniteMLA& a, const ElemSet& s) {
  require_carrier(a, s);
  return close(a, s, {.star = true, .conjugate = true, .absorb = true});
}

ElemSet normal_closure(const FiniteMLA& a, const ElemSet& s) {
  require_carrier(a, s);
  return close(a, s, {.conjugate = true});
}

std::optional<Violation> subalgebra_violation(const FiniteMLA& a, const ElemSet& s) {
  require_carrier(a, s);
  if (!s.contains(0)) return Violation{"identity", {0}, "identity not a member"};
  const auto m = s.members();
  for (Elem x : m)
    for (Elem y : m)
      if (!s.contains(a.mul(x, y))) return Violation{"product", {x, y}, {}};
  for (Elem x : m)
    if (!s.contains(a.inv(x))) return Violation{"inverse", {x}, {}};
  for (Elem x : m)
    for (Elem y : m)
      if (!s.contains(a.star(x, y))) return Violation{"lie product", {x, y}, {}};
  return std::nullopt;
}

std::optional<Violation> ideal_violation(const FiniteMLA& a, const ElemSet& s) {
  if (auto v = subalgebra_violation(a, s)) return v;
  const auto n = static_cast<Elem>(a.order());
  const auto m = s.members();
  for (Elem g = 0; g < n; ++g)
    for (Elem h : m)
      if (!s.contains(a.conj(g, h))) return Violation{"conjugation", {g, h}, {}};
  for (Elem g = 0; g < n; ++g)
    for (Elem h : m)
      if (!s.contains(a.star(g, h))) return Violation{"lie absorption", {g, h}, {}};
  return std::nullopt;
}

bool is_subgroup(const FiniteMLA& a, const ElemSet& s) {
  require_carrier(a, s);
  return s.contains(0) && gen_subgroup(a, s) == s;
}

bool is_subalgebra(const FiniteMLA& a, const ElemSet& s) {
  return !subalgebra_violation(a, s).has_value();
}

bool is_ideal(const FiniteMLA& a, const ElemSet& s) {
  return !ideal_violation(a, s).has_value();
}

// --- lattice -----------------------------------------------------------------

std::vector<ElemSet> all_subalgebras(const FiniteMLA& a, const Limits& limits) {
  require_bound(a, limits);
  const auto n = static_cast<Elem>(a.order());
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::deque<ElemSet> frontier;
  const auto bottom = gen_subalgebra(a, ElemSet(n));
  seen.insert(bottom);
  frontier.push_back(bottom);
  // Every subalgebra is reached from {1} by adjoining one element at a time.
  while (!frontier.empty()) {
    const ElemSet s = frontier.front();
    frontier.pop_front();
    for (Elem g = 0; g < n; ++g) {
      if (s.contains(g)) continue;
      ElemSet t = s;
      t.insert(g);
      t = close(a, std::move(t), {.star = true});
      if (seen.insert(t).second) frontier.push_back(std::move(t));
    }
  }
  std::vector<ElemSet> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

std::vector<ElemSet> maximal_below(const std::vector<ElemSet>& lattice,
                                   const ElemSet& top) {
  std::vector<ElemSet> inside;
  for (const auto& s : lattice)
    if (s.proper_subset_of(top)) inside.push_back(s);
  std::vector<ElemSet> out;
  for (const auto& s : inside) {
    bool maximal = true;
    for (const auto& t : inside) {
      if (s.proper_subset_of(t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  sort_canonical(out);
  return out;
}

ElemSet frattini_within(const std::vector<ElemSet>& lattice, const ElemSet& top) {
  const auto maximal = maximal_below(lattice, top);
  if (maximal.empty()) return top;
  ElemSet phi = top;
  for (const auto& m : maximal) phi &= m;
  return phi;
}

std::vector<ElemSet> maximal_subalgebras(const FiniteMLA& a, const Limits& limits) {
  return maximal_below(all_subalgebras(a, limits), ElemSet::full(a.order()));
}

ElemSet frattini(const FiniteMLA& a, const Limits& limits) {
  return frattini_within(all_subalgebras(a, limits), ElemSet::full(a.order()));
}

ElemSet non_generators(const FiniteMLA& a, const Limits& limits) {
  return non_generators_from(a, all_subalgebras(a, limits));
}

ElemSet non_generators_by_definition(const FiniteMLA& a) {
  const auto n = a.order();
  if (n > 16) {
    throw BoundExceeded("direct non-generator scan refuses order " + std::to_string(n));
  }
  const std::uint32_t subsets = 1u << n;
  const auto full = ElemSet::full(n);
  std::vector<char> generates(subsets, 0);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    ElemSet x(n);
    for (Elem e = 0; e < n; ++e)
      if (mask & (1u << e)) x.insert(e);
    generates[mask] = gen_subalgebra(a, x) == full;
  }
  ElemSet result = full;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (!generates[mask]) continue;
    for (Elem g = 0; g < n; ++g) {
      if ((mask & (1u << g)) && !generates[mask & ~(1u << g)]) result.erase(g);
    }
  }
  return result;
}

// --- centers and commutators -------------------------------------------------

Centers centers(const FiniteMLA& a) {
  const auto n = static_cast<Elem>(a.order());
  Centers c{ElemSet(n), ElemSet(n), ElemSet(n)};
  for (Elem g = 0; g < n; ++g) {
    bool central = true, lie = true;
    for (Elem x = 0; x < n && (central || lie); ++x) {
      if (a.mul(g, x) != a.mul(x, g)) central = false;
      if (a.star(g, x) != 0) lie = false;
    }
    if (central) c.group.insert(g);
    if (lie) c.lie.insert(g);
  }
  c.multiplicative = c.group & c.lie;
  return c;
}

ElemSet pair_commutator(const FiniteMLA& a, const ElemSet& h) {
  require_ideal(a, h, "pair_commutator");
  const auto n = static_cast<Elem>(a.order());
  ElemSet gens(n);
  for (Elem g = 0; g < n; ++g) {
    h.for_each([&](Elem x) {
      gens.insert(a.comm(g, x));
      gens.insert(a.star(g, x));
    });
  }
  return gen_ideal(a, gens);
}

ElemSet pair_center(const FiniteMLA& a, const ElemSet& h) {
  require_ideal(a, h, "pair_center");
  const auto n = static_cast<Elem>(a.order());
  ElemSet out(n);
  h.for_each([&](Elem x) {
    for (Elem g = 0; g < n; ++g)
      if (a.comm(g, x) != 0 || a.star(g, x) != 0) return;
    out.insert(x);
  });
  return out;
}

ElemSet group_commutator(const FiniteMLA& a, const ElemSet& h) {
  require_carrier(a, h);
  const auto n = static_cast<Elem>(a.order());
  ElemSet gens(n);
  for (Elem g = 0; g < n; ++g) h.for_each([&](Elem x) { gens.insert(a.comm(g, x)); });
  return normal_closure(a, gens);
}

// --- series ------------------------------------------------------------------

namespace {

template <class Step>
SeriesResult iterate_series(ElemSet start, Step step, const ElemSet& terminal) {
  SeriesResult r;
  r.terms.push_back(std::move(start));
  for (;;) {
    ElemSet next = step(r.terms.size() - 1, r.terms.back());
    const bool repeat = next == r.terms.back();
    r.terms.push_back(std::move(next));
    if (repeat) break;
  }
  r.stabilized = true;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    if (r.terms[i] == terminal) {
      r.class_index = i;
      break;
    }
  }
  return r;
}

}  // namespace

SeriesResult lower_central_series(const FiniteMLA& a) {
  const auto n = a.order();
  return iterate_series(
      ElemSet::full(n),
      [&](std::size_t, const ElemSet& m) { return pair_commutator(a, m); },
      ElemSet::singleton(n, 0));
}

SeriesResult lower_central_series_plain(const FiniteMLA& a) {
  const auto n = a.order();
  return iterate_series(
      ElemSet::full(n),
      [&](std::size_t i, const ElemSet& m) {
        return i == 0 ? pair_commutator(a, m) : group_commutator(a, m);
      },
      ElemSet::singleton(n, 0));
}

std::optional<std::size_t> nilpotency_class(const FiniteMLA& a) {
  return lower_central_series(a).class_index;
}

SeriesResult upper_central_series(const FiniteMLA& a) {
  const auto n = static_cast<Elem>(a.order());
  return iterate_series(
      ElemSet::singleton(n, 0),
      [&](std::size_t, const ElemSet& z) {
        if (!is_ideal(a, z)) {
          throw std::logic_error("upper central series term is not an ideal");
        }
        ElemSet next(n);
        for (Elem g = 0; g < n; ++g) {
          bool in = true;
          for (Elem x = 0; x < n && in; ++x)
            in = z.contains(a.comm(g, x)) && z.contains(a.star(g, x));
          if (in) next.insert(g);
        }
        return next;
      },
      ElemSet::full(n));
}

ElemSet normalizer(const FiniteMLA& a, const ElemSet& h) {
  require_carrier(a, h);
  if (auto v = subalgebra_violation(a, h)) {
    throw PreconditionError("normalizer: argument is not a subalgebra (" + v->law + ")");
  }
  const auto n = static_cast<Elem>(a.order());
  const auto members = h.members();
  ElemSet out(n);
  for (Elem g = 0; g < n; ++g) {
    bool in = true;
    for (Elem x : members) {
      if (!h.contains(a.conj(g, x)) || !h.contains(a.star(g, x))) {
        in = false;
        break;
      }
    }
    if (in) out.insert(g);
  }
  return out;
}

SeriesResult normalizer_tower(const FiniteMLA& a, const ElemSet& h) {
  return iterate_series(
      h, [&](std::size_t, const ElemSet& s) { return normalizer(a, s); },
      ElemSet::full(a.order()));
}

bool satisfies_normalizer_condition(const FiniteMLA& a, const Limits& limits) {
  const auto full = ElemSet::full(a.order());
  for (const auto& h : all_subalgebras(a, limits)) {
    if (h == full) continue;
    if (!h.proper_subset_of(normalizer(a, h))) return false;
  }
  return true;
}

// --- report ------------------------------------------------------------------

CheckList structure_report(const FiniteMLA& a, const Limits& limits) {
  const auto lattice = all_subalgebras(a, limits);
  const auto n = a.order();
  const auto full = ElemSet::full(n);
  const auto phi = frattini_within(lattice, full);
  const auto cls = nilpotency_class(a);
  const auto mcomm = pair_commutator(a, full);
  const auto ctr = centers(a);

  std::vector<ElemSet> ideals;
  for (const auto& s : lattice)
    if (is_ideal(a, s)) ideals.push_back(s);

  CheckList out;

  {
    bool ok = true;
    std::string detail;
    for (const auto& h : lattice) {
      const auto nh = normalizer(a, h);
      if (!is_subalgebra(a, nh) || !h.subset_of(nh)) {
        ok = false;
        detail = witness_detail(a, "H =", h);
        break;
      }
    }
    out.add("normalizer_is_subalgebra", ok, detail);
  }

  {
    const auto ng = non_generators_from(a, lattice);
    bool ok = ng == phi;
    std::string detail = "frattini " + format_set(a, phi);
    if (n <= 8) {
      const auto direct = non_generators_by_definition(a);
      ok = ok && direct == phi;
      detail += ", by definition " + format_set(a, direct);
    }
    out.add("frattini_equals_non_generators", ok, detail);
  }

  out.add("center_commutator_in_frattini", (ctr.multiplicative & mcomm).subset_of(phi),
          witness_detail(a, "MZ ∩ ^M[G,G] =", ctr.multiplicative & mcomm));

  if (n > 1 && lattice.size() == 2) {
    out.add("prime_order_without_proper_subalgebras", is_prime(n),
            "order " + std::to_string(n));
  } else {
    out.add("prime_order_without_proper_subalgebras", Outcome::vacuous);
  }

  {
    const auto mult = lower_central_series(a);
    const auto plain = lower_central_series_plain(a);
    if (mult.terms == plain.terms) {
      out.add("lower_series_variants_agree", Outcome::passed);
    } else {
      out.add("lower_series_variants_agree", Outcome::flagged,
              "plain-bracket series diverges from the multiplicative one");
    }
  }

  const char* nilpotent_checks[] = {
      "normalizer_tower_bound", "normalizer_condition",
      "maximal_subalgebras_are_ideals", "commutator_in_frattini",
      "commutator_product_generates_only_whole"};
  if (!cls) {
    for (const char* name : nilpotent_checks) out.add(name, Outcome::vacuous, "not nilpotent");
  } else {
    const std::size_t c = *cls;
    {
      bool ok = true;
      std::string detail = "class " + std::to_string(c);
      for (const auto& h : lattice) {
        const auto tower = normalizer_tower(a, h);
        if (!tower.class_index || *tower.class_index > c) {
          ok = false;
          detail = witness_detail(a, "tower of", h);
          break;
        }
      }
      out.add(nilpotent_checks[0], ok, detail);
    }
    {
      bool ok = true;
      std::string detail;
      for (const auto& h : lattice) {
        if (h == full) continue;
        if (!h.proper_subset_of(normalizer(a, h))) {
          ok = false;
          detail = witness_detail(a, "self-normalizing", h);
          break;
        }
      }
      out.add(nilpotent_checks[1], ok, detail);
    }
    {
      bool ok = true;
      std::string detail;
      for (const auto& m : maximal_below(lattice, full)) {
        if (!is_ideal(a, m)) {
          ok = false;
          detail = witness_detail(a, "maximal", m);
          break;
        }
      }
      out.add(nilpotent_checks[2], ok, detail);
    }
    out.add(nilpotent_checks[3], mcomm.subset_of(phi),
            witness_detail(a, "^M[G,G] =", mcomm));
    {
      bool ok = true;
      std::string detail;
      for (const auto& h : lattice) {
        if (gen_subalgebra(a, mcomm | h) == full && h != full) {
          ok = false;
          detail = witness_detail(a, "H =", h);
          break;
        }
      }
      out.add(nilpotent_checks[4], ok, detail);
    }
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& k : ideals) {
      bool supplemented = false;
      for (const auto& h : lattice) {
        if (h != full && gen_subalgebra(a, h | k) == full) {
          supplemented = true;
          break;
        }
      }
      if (k.subset_of(phi) == supplemented) {
        ok = false;
        detail = witness_detail(a, "K =", k);
        break;
      }
    }
    out.add("frattini_lemma_1", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& h : lattice) {
      const auto phi_h = frattini_within(lattice, h);
      for (const auto& k : ideals) {
        if (k.subset_of(phi_h) && !k.subset_of(phi)) {
          ok = false;
          detail = witness_detail(a, "H =", h) + ", " + witness_detail(a, "K =", k);
          break;
        }
      }
      if (!ok) break;
    }
    out.add("frattini_lemma_2", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    auto shared = std::make_shared<const FiniteMLA>(a);
    for (const auto& k : ideals) {
      const auto sub = induced_subalgebra(shared, k);
      if (!nilpotency_class(*sub.algebra)) continue;
      const auto phi_k = frattini_within(lattice, k);
      if (!phi_k.subset_of(phi)) {
        ok = false;
        detail = witness_detail(a, "K =", k) + ", " + witness_detail(a, "Φ(K) =", phi_k);
        break;
      }
    }
    out.add("frattini_lemma_3", ok, detail);
  }
  return out;
}

}  // namespace mla
