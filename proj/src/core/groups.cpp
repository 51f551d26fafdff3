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

#include "mla/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mla {
namespace {

using Perm = std::vector<std::size_t>;

std::string power_name(const std::string& base, std::size_t i) {
  if (i == 0) return "1";
  if (i == 1) return base;
  return base + "^" + std::to_string(i);
}

FiniteMLA from_rule(std::size_t n, std::vector<std::string> names,
                    const auto& product) {
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>(product(i, j));
  return FiniteMLA(n, std::move(table), std::vector<Elem>(n * n, 0), std::move(names));
}

std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

std::size_t perm_order(const Perm& p) {
  Perm q = p;
  std::size_t k = 1;
  Perm id(p.size());
  std::iota(id.begin(), id.end(), 0);
  while (q != id) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    q = std::move(r);
    ++k;
  }
  return k;
}

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteMLA permutation_group(std::size_t k, bool even_only) {
  std::vector<Perm> perms;
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(perms.begin(), perms.end(), [](const Perm& a, const Perm& b) {
    const auto oa = perm_order(a), ob = perm_order(b);
    if (oa != ob) return oa < ob;
    return cycle_name(a) < cycle_name(b);
  });
  std::map<Perm, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = i;
    names.push_back(cycle_name(perms[i]));
  }
  return from_rule(perms.size(), std::move(names), [&](std::size_t i, std::size_t j) {
    Perm r(k);
    for (std::size_t x = 0; x < k; ++x) r[x] = perms[i][perms[j][x]];
    return index.at(r);
  });
}

}  // namespace

FiniteMLA cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(power_name("g", i));
  return from_rule(n, std::move(names), [n](std::size_t i, std::size_t j) { return (i + j) % n; });
}

FiniteMLA klein_four() {
  return with_names(group_product(cyclic_group(2), cyclic_group(2)), {"1", "a", "b", "ab"});
}

FiniteMLA dihedral_group(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      if (j == 0) names.push_back(power_name("b", i));
      else names.push_back(i == 0 ? "a" : power_name("b", i) + "a");
    }
  return from_rule(2 * m, std::move(names), [m](std::size_t x, std::size_t y) {
    const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    // b^i a^j b^k a^l = b^(i ± k) a^(j + l), since a b = b^-1 a.
    const std::size_t e = j == 0 ? (i + k) % m : (i + m - k) % m;
    return ((j + l) % 2) * m + e;
  });
}

FiniteMLA dicyclic_group(std::size_t m) {
  const std::size_t r = 2 * m;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      if (j == 0) names.push_back(power_name("a", i));
      else names.push_back(i == 0 ? "x" : power_name("a", i) + "x");
    }
  return from_rule(2 * r, std::move(names), [m, r](std::size_t x, std::size_t y) {
    const std::size_t i = x % r, j = x / r, k = y % r, l = y / r;
    // x^j a^k = a^(±k) x^j, and x^2 = a^m.
    std::size_t e = j == 0 ? (i + k) % r : (i + r - k) % r;
    std::size_t t = j + l;
    if (t == 2) {
      e = (e + m) % r;
      t = 0;
    }
    return t * r + e;
  });
}

FiniteMLA quaternion_group() {
  return with_names(dicyclic_group(2), {"1", "i", "-1", "-i", "j", "k", "-j", "-k"});
}

FiniteMLA symmetric_group(std::size_t k) { return permutation_group(k, false); }
FiniteMLA alternating_group(std::size_t k) { return permutation_group(k, true); }

FiniteMLA group_product(const FiniteMLA& a, const FiniteMLA& b) {
  return trivial_star(direct_product(trivial_star(a), trivial_star(b)));
}

std::vector<NamedGroup> builtin_groups(std::size_t max_order) {
  std::vector<NamedGroup> all;
  auto add = [&](std::string name, FiniteMLA g) {
    if (g.order() <= max_order) all.push_back({std::move(name), std::move(g)});
  };
  const auto z = [](std::size_t n) { return cyclic_group(n); };
  add("Z1", z(1));
  add("Z2", z(2));
  add("Z3", z(3));
  add("Z4", z(4));
  add("V4", klein_four());
  add("Z5", z(5));
  add("Z6", z(6));
  add("S3", symmetric_group(3));
  add("Z7", z(7));
  add("Z8", z(8));
  add("Z2xZ4", group_product(z(2), z(4)));
  add("Z2xZ2xZ2", group_product(group_product(z(2), z(2)), z(2)));
  add("D4", dihedral_group(4));
  add("Q8", quaternion_group());
  add("Z9", z(9));
  add("Z3xZ3", group_product(z(3), z(3)));
  add("Z10", z(10));
  add("D5", dihedral_group(5));
  add("Z11", z(11));
  add("Z12", z(12));
  add("Z2xZ6", group_product(z(2), z(6)));
  add("D6", dihedral_group(6));
  add("A4", alternating_group(4));
  add("Dic3", dicyclic_group(3));
  return all;
}

std::optional<FiniteMLA> builtin_group(std::string_view name) {
  for (auto& g : builtin_groups(12))
    if (g.name == name) return std::move(g.group);
  if (name == "S4") return symmetric_group(4);
  if (name == "S5") return symmetric_group(5);
  if (name == "A5") return alternating_group(5);
  return std::nullopt;
}

}  // namespace mla
