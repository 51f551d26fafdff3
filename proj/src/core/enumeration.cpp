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

#include "mla/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mla/groups.hpp"

namespace mla {
namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

using Table = std::vector<Elem>;

// Star table determined by the values x * y on generator pairs, using
// a * (x w) = (a * x) ^x(a * w) for the generator rows and
// (x w) * k = ^x(w * k) (x * k) for the rest. Empty on a conflict.
Table derive_star(const FiniteMLA& g, const std::vector<Elem>& gens,
                  const std::map<std::pair<Elem, Elem>, Elem>& values) {
  const auto n = g.order();
  std::vector<Table> gen_row(n);
  for (Elem a : gens) {
    Table row(n, kNone);
    row[0] = 0;
    std::vector<Elem> stack{0};
    while (!stack.empty()) {
      const Elem w = stack.back();
      stack.pop_back();
      for (Elem x : gens) {
        const Elem v = g.mul(values.at({a, x}), g.conj(x, row[w]));
        const Elem e = g.mul(x, w);
        if (row[e] == kNone) {
          row[e] = v;
          stack.push_back(e);
        } else if (row[e] != v) {
          return {};
        }
      }
    }
    // Early abort: a generator row must already satisfy a * a = 1.
    if (row[a] != 0) return {};
    gen_row[a] = std::move(row);
  }

  std::vector<Table> full(n);
  full[0] = Table(n, 0);
  std::vector<Elem> stack{0};
  while (!stack.empty()) {
    const Elem w = stack.back();
    stack.pop_back();
    for (Elem x : gens) {
      const Elem e = g.mul(x, w);
      Table r(n);
      for (Elem k = 0; k < n; ++k) r[k] = g.mul(g.conj(x, full[w][k]), gen_row[x][k]);
      if (full[e].empty()) {
        full[e] = std::move(r);
        stack.push_back(e);
      } else if (full[e] != r) {
        return {};
      }
    }
  }
  Table star;
  star.reserve(n * n);
  for (const auto& r : full) star.insert(star.end(), r.begin(), r.end());
  return star;
}

// Extends the generator images to the subgroup they generate. Returns false
// on a conflict or when the partial map stops being injective.
bool extend(const FiniteMLA& a, const FiniteMLA& b, const std::vector<Elem>& gens,
            const std::vector<Elem>& images, std::size_t depth, std::vector<Elem>& map,
            std::vector<char>& used) {
  std::fill(map.begin(), map.end(), kNone);
  std::fill(used.begin(), used.end(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<Elem> stack{0};
  while (!stack.empty()) {
    const Elem w = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < depth; ++j) {
      const Elem e = a.mul(gens[j], w);
      const Elem v = b.mul(images[j], map[w]);
      if (map[e] == kNone) {
        if (used[v]) return false;
        map[e] = v;
        used[v] = 1;
        stack.push_back(e);
      } else if (map[e] != v) {
        return false;
      }
    }
  }
  return true;
}

bool preserves_star(const FiniteMLA& a, const FiniteMLA& b, const std::vector<Elem>& map) {
  const auto n = a.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (map[a.star(x, y)] != b.star(map[x], map[y])) return false;
  return true;
}

std::string join(const ElemSet& s) {
  std::string out;
  s.for_each([&](Elem e) { out += (out.empty() ? "" : ",") + idx(e); });
  return out.empty() ? "-" : out;
}

}  // namespace

std::vector<Elem> generating_sequence(const FiniteMLA& group) {
  const auto n = group.order();
  std::vector<Elem> gens;
  ElemSet cur = ElemSet::singleton(n, 0);
  while (!cur.is_full()) {
    Elem best = kNone;
    std::size_t best_size = 0;
    for (Elem x = 0; x < n; ++x) {
      if (cur.contains(x)) continue;
      ElemSet s = cur;
      s.insert(x);
      const auto size = gen_subgroup(group, s).count();
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    cur.insert(best);
    cur = gen_subgroup(group, cur);
  }
  return gens;
}

std::vector<FiniteMLA> enumerate_stars(const FiniteMLA& group, const Limits& limits) {
  if (auto r = verify_group(group); !r) {
    throw PreconditionError("not a group table: " + r.describe());
  }
  const auto n = group.order();
  if (n > limits.enumeration_bound) {
    throw BoundExceeded("enumerate_stars refuses order " + idx(n) + " above the bound " +
                        idx(limits.enumeration_bound));
  }
  const FiniteMLA base = trivial_star(group);
  const auto gens = generating_sequence(base);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a : gens)
    for (Elem b : gens)
      if (a != b) pairs.emplace_back(a, b);

  std::map<std::pair<Elem, Elem>, Elem> values;
  for (Elem a : gens) values[{a, a}] = 0;
  std::vector<Elem> choice(pairs.size(), 0);
  std::set<Table> found;
  while (true) {
    for (std::size_t i = 0; i < pairs.size(); ++i) values[pairs[i]] = choice[i];
    Table star = gens.empty() ? Table{0} : derive_star(base, gens, values);
    if (!star.empty() && verify_star_axioms(with_star(base, star), Exec::serial)) {
      found.insert(std::move(star));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == n) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::vector<FiniteMLA> out;
  for (const auto& t : found) out.push_back(with_star(base, t));
  return out;
}

Completion complete_partial_star(const FiniteMLA& group, const StarConstraint& c,
                                 const Limits& limits) {
  const auto n = group.order();
  std::map<std::pair<Elem, Elem>, Elem> seen;
  for (const auto& [i, j, k] : c.pairs) {
    if (i >= n || j >= n || k >= n) {
      throw StructuralError("constraint " + idx(i) + "," + idx(j) + "," + idx(k) +
                            " is out of range for order " + idx(n));
    }
    auto [it, fresh] = seen.emplace(std::make_pair(i, j), k);
    if (!fresh && it->second != k) {
      return {{}, "contradictory constraints: " + idx(i) + " * " + idx(j) + " is given as both " +
                      idx(it->second) + " and " + idx(k)};
    }
    if (i == j && k != 0) {
      return {{}, "g * g = 1 is forced, so " + idx(i) + " * " + idx(i) + " = " + idx(k) +
                      " is impossible"};
    }
    if ((i == 0 || j == 0) && k != 0) {
      return {{}, "g * 1 = 1 * g = 1 is forced, so " + idx(i) + " * " + idx(j) + " = " + idx(k) +
                      " is impossible"};
    }
  }
  Completion out;
  for (auto& a : enumerate_stars(group, limits)) {
    const bool ok = std::all_of(c.pairs.begin(), c.pairs.end(), [&](const auto& p) {
      return a.star(p[0], p[1]) == p[2];
    });
    if (ok) out.algebras.push_back(std::move(a));
  }
  if (out.algebras.empty()) out.explanation = "no Lie product on this group satisfies the constraints";
  return out;
}

bool for_each_isomorphism(const MlaPtr& a, const MlaPtr& b,
                          const std::function<bool(const MLAHom&)>& visit) {
  const auto n = a->order();
  if (b->order() != n) return true;
  const auto gens = generating_sequence(*a);
  std::vector<std::size_t> order_b(n);
  for (Elem y = 0; y < n; ++y) order_b[y] = b->element_order(y);
  std::vector<Elem> images(gens.size());
  std::vector<Elem> map(n);
  std::vector<char> used(n);

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (!extend(*a, *b, gens, images, depth, map, used)) return true;
      if (!preserves_star(*a, *b, map)) return true;
      return visit(MLAHom{a, b, map});
    }
    const auto want = a->element_order(gens[depth]);
    for (Elem y = 0; y < n; ++y) {
      if (order_b[y] != want) continue;
      images[depth] = y;
      if (!extend(*a, *b, gens, images, depth + 1, map, used)) continue;
      if (!search(depth + 1)) return false;
    }
    return true;
  };
  return search(0);
}

std::vector<MLAHom> find_isomorphisms(const MlaPtr& a, const MlaPtr& b) {
  std::vector<MLAHom> out;
  for_each_isomorphism(a, b, [&](const MLAHom& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<MLAHom> find_isomorphism(const MlaPtr& a, const MlaPtr& b) {
  std::optional<MLAHom> out;
  for_each_isomorphism(a, b, [&](const MLAHom& f) {
    out = f;
    return false;
  });
  return out;
}

std::vector<MLAHom> group_automorphisms(const FiniteMLA& group) {
  auto g = share(trivial_star(group));
  return find_isomorphisms(g, g);
}

std::vector<Elem> canonical_star(const FiniteMLA& a, const std::vector<MLAHom>& autos) {
  const auto n = a.order();
  Table best(a.star_table().begin(), a.star_table().end());
  Table t(n * n);
  for (const auto& phi : autos) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) t[phi.map[x] * n + phi.map[y]] = phi.map[a.star(x, y)];
    if (t < best) best = t;
  }
  return best;
}

std::vector<FiniteMLA> stars_up_to_isomorphism(const FiniteMLA& group, const Limits& limits) {
  const auto autos = group_automorphisms(group);
  std::set<Table> classes;
  for (const auto& a : enumerate_stars(group, limits)) classes.insert(canonical_star(a, autos));
  std::vector<FiniteMLA> out;
  for (const auto& t : classes) out.push_back(with_star(trivial_star(group), t));
  return out;
}

std::vector<CatalogEntry> build_catalog(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.enumeration_bound) {
    throw BoundExceeded("catalog refuses order " + idx(max_order) + " above the bound " +
                        idx(limits.enumeration_bound));
  }
  std::vector<CatalogEntry> out;
  for (const auto& g : builtin_groups(max_order)) {
    std::size_t i = 0;
    for (auto& a : stars_up_to_isomorphism(g.group, limits)) {
      CatalogEntry e{g.name, g.name + "_" + idx(i++), std::move(a), {}, false, {}, {}, false};
      const auto full = ElemSet::full(e.algebra.order());
      e.nilpotency_class = nilpotency_class(e.algebra);
      e.perfect = pair_commutator(e.algebra, full) == full;
      e.frattini = frattini(e.algebra, limits);
      e.centers = centers(e.algebra);
      e.report_passed = verify_star_axioms(e.algebra, Exec::serial).ok() &&
                        structure_report(e.algebra, limits).all_passed();
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::string catalog_index_line(const CatalogEntry& e) {
  std::ostringstream os;
  os << e.file_stem << ".mla " << e.group_name << " order=" << e.algebra.order()
     << " class=" << (e.nilpotency_class ? idx(*e.nilpotency_class) : "none")
     << " perfect=" << (e.perfect ? "yes" : "no")
     << " trivial_star=" << (e.algebra.has_trivial_star() ? "yes" : "no")
     << " frattini=" << join(e.frattini) << " center=" << join(e.centers.group)
     << " lie_center=" << join(e.centers.lie)
     << " multiplicative_center=" << join(e.centers.multiplicative)
     << " report=" << (e.report_passed ? "pass" : "fail");
  return os.str();
}

}  // namespace mla
