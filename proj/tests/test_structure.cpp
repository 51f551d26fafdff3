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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mla/fixtures.hpp"
#include "mla/groups.hpp"
#include "mla/structure.hpp"
#include "oracle.hpp"

using namespace mla;

namespace {

ElemSet set_of(std::size_t n, const std::set<Elem>& s) {
  ElemSet out(n);
  for (Elem e : s) out.insert(e);
  return out;
}

std::vector<std::vector<Elem>> sorted_members(const std::vector<ElemSet>& sets) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : sets) out.push_back(s.members());
  std::sort(out.begin(), out.end());
  return out;
}

// ^M[G, M] straight from the definition: the ideal generated by all [g, m]
// and g * m.
std::set<Elem> oracle_pair_commutator(const oracle::Raw& r, const std::set<Elem>& m) {
  std::set<Elem> gens;
  for (Elem g = 0; g < r.n; ++g)
    for (Elem x : m) {
      gens.insert(r.m(r.m(g, x), r.m(r.inv(g), r.inv(x))));
      gens.insert(r.s(g, x));
    }
  return oracle::closure(r, gens, true);
}

std::vector<FiniteMLA> corpus() {
  std::vector<FiniteMLA> out = {*fixtures::v4a(), *fixtures::d4b(), *fixtures::s3c()};
  for (const auto& g : builtin_groups(8)) {
    out.push_back(commutator_star(g.group));
    out.push_back(trivial_star(g.group));
  }
  return out;
}

}  // namespace

TEST_CASE("gen_subalgebra and gen_ideal examples") {
  const auto v4a = fixtures::v4a();
  const auto s3c = fixtures::s3c();
  const auto d4b = fixtures::d4b();
  CHECK(gen_subalgebra(*v4a, ElemSet(4, {1})) == ElemSet(4, {0, 1}));
  CHECK(gen_subalgebra(*v4a, ElemSet(4)) == ElemSet(4, {0}));
  CHECK(gen_subalgebra(*s3c, ElemSet(6, {4})) == fixtures::a3_in_s3());
  CHECK(gen_ideal(*s3c, ElemSet(6, {1})).is_full());
  CHECK(gen_ideal(*s3c, ElemSet(6)) == ElemSet(6, {0}));
  CHECK(gen_ideal(*d4b, ElemSet(8, {2})) == ElemSet(8, {0, 2}));
}

TEST_CASE("closures match the fixpoint oracle and satisfy the closure laws") {
  std::mt19937 rng(7);
  for (const auto& a : corpus()) {
    const oracle::Raw r(a);
    const auto n = a.order();
    for (int trial = 0; trial < 20; ++trial) {
      std::set<Elem> s;
      for (Elem e = 0; e < n; ++e)
        if (rng() % 4 == 0) s.insert(e);
      const ElemSet es = set_of(n, s);
      const ElemSet sub = gen_subalgebra(a, es);
      const ElemSet ideal = gen_ideal(a, es);
      CHECK(sub == set_of(n, oracle::closure(r, s, false)));
      CHECK(ideal == set_of(n, oracle::closure(r, s, true)));
      CHECK(es.subset_of(sub));
      CHECK(sub.subset_of(ideal));
      CHECK(gen_subalgebra(a, sub) == sub);
      CHECK(gen_ideal(a, ideal) == ideal);
      ElemSet bigger = es;
      bigger.insert(static_cast<Elem>(rng() % n));
      CHECK(sub.subset_of(gen_subalgebra(a, bigger)));
      CHECK(ideal.subset_of(gen_ideal(a, bigger)));
      CHECK(is_subalgebra(a, sub));
      CHECK(is_ideal(a, ideal));
    }
  }
}

TEST_CASE("is_subalgebra and is_ideal") {
  CHECK(is_subalgebra(*fixtures::v4a(), ElemSet(4, {0, 1})));
  CHECK(is_ideal(*fixtures::s3c(), fixtures::a3_in_s3()));
  CHECK_FALSE(is_ideal(*fixtures::s3c(), ElemSet(6, {0, 1})));
  CHECK(is_subalgebra(*fixtures::s3c(), ElemSet(6, {0, 1})));
  CHECK_FALSE(is_subalgebra(*fixtures::s3c(), ElemSet(6, {0, 1, 2})));
  const auto v = ideal_violation(*fixtures::s3c(), ElemSet(6, {0, 1}));
  REQUIRE(v.has_value());
  CHECK_FALSE(v->witness.empty());
}

TEST_CASE("all_subalgebras matches a subset scan") {
  for (const auto& a : corpus()) {
    const oracle::Raw r(a);
    const auto n = a.order();
    std::vector<std::vector<Elem>> expected;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); mask += 2) {  // contains 1
      std::set<Elem> s;
      for (Elem e = 0; e < n; ++e)
        if ((mask >> e) & 1u) s.insert(e);
      if (oracle::closure(r, s, false) == s) expected.emplace_back(s.begin(), s.end());
    }
    std::sort(expected.begin(), expected.end());
    const auto subs = all_subalgebras(a);
    CHECK(sorted_members(subs) == expected);
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(canonical_less(subs[i - 1], subs[i]));
  }
  CHECK(all_subalgebras(trivial_algebra()) == std::vector<ElemSet>{ElemSet(1, {0})});
}

TEST_CASE("maximal subalgebras and Frattini subalgebras of the examples") {
  CHECK(sorted_members(maximal_subalgebras(*fixtures::v4a())) ==
        std::vector<std::vector<Elem>>{{0, 1}, {0, 2}, {0, 3}});
  // D4 = b^i a^j at index 4j + i.
  CHECK(sorted_members(maximal_subalgebras(*fixtures::d4b())) ==
        std::vector<std::vector<Elem>>{{0, 1, 2, 3}, {0, 2, 4, 6}, {0, 2, 5, 7}});
  CHECK(sorted_members(maximal_subalgebras(*fixtures::s3c())) ==
        std::vector<std::vector<Elem>>{{0, 1}, {0, 2}, {0, 3}, {0, 4, 5}});

  CHECK(frattini(*fixtures::v4a()) == ElemSet(4, {0}));
  CHECK(frattini(*fixtures::d4b()) == ElemSet(8, {0, 2}));
  CHECK(frattini(*fixtures::s3c()) == ElemSet(6, {0}));
  CHECK(format_set(*fixtures::d4b(), frattini(*fixtures::d4b())) == "{1, b^2}");
  CHECK(frattini(trivial_algebra()) == ElemSet(1, {0}));
}

TEST_CASE("non-generators") {
  CHECK(non_generators(*fixtures::v4a()) == ElemSet(4, {0}));
  CHECK(non_generators(*fixtures::d4b()) == ElemSet(8, {0, 2}));
  CHECK(non_generators(trivial_algebra()) == ElemSet(1, {0}));
  for (const auto& a : corpus()) {
    CHECK(non_generators_by_definition(a) == frattini(a));
    CHECK(non_generators(a) == frattini(a));
  }
}

TEST_CASE("lattice computations refuse above the bound") {
  CHECK_THROWS_AS(all_subalgebras(*fixtures::a5c()), BoundExceeded);
  Limits small;
  small.lattice_bound = 4;
  CHECK_THROWS_AS(frattini(*fixtures::d4b(), small), BoundExceeded);
  CHECK_NOTHROW(frattini(*fixtures::v4a(), small));
}

TEST_CASE("centers") {
  const FiniteMLA z4 = trivial_star(cyclic_group(4));
  const Centers c4 = centers(z4);
  CHECK(c4.group.is_full());
  CHECK(c4.lie.is_full());
  CHECK(c4.multiplicative.is_full());

  const Centers s = centers(*fixtures::s3c());
  CHECK(s.group == ElemSet(6, {0}));
  CHECK(s.lie == ElemSet(6, {0}));
  CHECK(s.multiplicative == ElemSet(6, {0}));

  for (const auto& a : corpus()) {
    const oracle::Raw r(a);
    const Centers c = centers(a);
    std::set<Elem> z, lz;
    for (Elem x = 0; x < r.n; ++x) {
      bool central = true, lie = true;
      for (Elem y = 0; y < r.n; ++y) {
        central = central && r.m(x, y) == r.m(y, x);
        lie = lie && r.s(x, y) == 0;
      }
      if (central) z.insert(x);
      if (lie) lz.insert(x);
    }
    CHECK(c.group == set_of(r.n, z));
    CHECK(c.lie == set_of(r.n, lz));
    CHECK(c.multiplicative == (c.group & c.lie));
    CHECK(is_ideal(a, c.group));
    CHECK(is_ideal(a, c.lie));
    CHECK(is_ideal(a, c.multiplicative));
  }
  CHECK(centers(*fixtures::d4b()).group == ElemSet(8, {0, 2}));
}

TEST_CASE("pair commutator and pair center") {
  const auto s3c = fixtures::s3c();
  const ElemSet a3 = fixtures::a3_in_s3();
  CHECK(pair_commutator(*s3c, a3) == a3);
  CHECK(pair_commutator(*s3c, ElemSet::full(6)) == a3);
  CHECK(pair_center(*s3c, a3) == ElemSet(6, {0}));
  const FiniteMLA z4 = trivial_star(cyclic_group(4));
  CHECK(pair_commutator(z4, ElemSet::full(4)) == ElemSet(4, {0}));
  CHECK(pair_center(z4, ElemSet(4, {0, 2})) == ElemSet(4, {0, 2}));
  for (const auto& a : corpus()) {
    const auto all = ElemSet::full(a.order());
    CHECK(pair_center(a, all) == centers(a).multiplicative);
    for (const auto& h : all_subalgebras(a)) {
      if (!is_ideal(a, h)) continue;
      std::set<Elem> hs;
      h.for_each([&](Elem e) { hs.insert(e); });
      CHECK(pair_commutator(a, h) == set_of(a.order(), oracle_pair_commutator(oracle::Raw(a), hs)));
      const ElemSet pc = pair_center(a, h);
      CHECK(is_ideal(a, pc));
      CHECK(pc.subset_of(centers(a).multiplicative & h));
    }
  }
}

TEST_CASE("lower central series") {
  const FiniteMLA z4 = trivial_star(cyclic_group(4));
  CHECK(nilpotency_class(z4) == 1);
  CHECK(nilpotency_class(trivial_algebra()) == 0);

  const SeriesResult s = lower_central_series(*fixtures::s3c());
  REQUIRE(s.terms.size() >= 3);
  CHECK(s.terms[1] == fixtures::a3_in_s3());
  CHECK(s.terms[2] == fixtures::a3_in_s3());
  CHECK(s.stabilized);
  CHECK_FALSE(nilpotency_class(*fixtures::s3c()).has_value());

  // a * b = b keeps the rotation subgroup in every term.
  const SeriesResult d = lower_central_series(*fixtures::d4b());
  CHECK(d.terms.back() == ElemSet(8, {0, 1, 2, 3}));
  CHECK_FALSE(nilpotency_class(*fixtures::d4b()).has_value());
  // The plain-bracket variant does reach {1} on D4B.
  const SeriesResult plain = lower_central_series_plain(*fixtures::d4b());
  CHECK(plain.terms.back() == ElemSet(8, {0}));

  for (const auto& a : corpus()) {
    const oracle::Raw r(a);
    std::set<Elem> cur;
    for (Elem e = 0; e < r.n; ++e) cur.insert(e);
    const SeriesResult lib = lower_central_series(a);
    for (const auto& term : lib.terms) {
      CHECK(term == set_of(r.n, cur));
      cur = oracle_pair_commutator(r, cur);
    }
    CHECK(lib.stabilized);
    if (lib.class_index) CHECK(lib.terms.back() == ElemSet(r.n, {0}));
  }
}

TEST_CASE("upper central series") {
  const SeriesResult v = upper_central_series(trivial_star(klein_four()));
  REQUIRE(v.terms.size() >= 2);
  CHECK(v.terms[1].is_full());
  const SeriesResult s = upper_central_series(*fixtures::s3c());
  CHECK(s.terms.back() == ElemSet(6, {0}));
  CHECK(s.stabilized);
  const SeriesResult q = upper_central_series(commutator_star(quaternion_group()));
  REQUIRE(q.terms.size() >= 3);
  CHECK(q.terms[1] == ElemSet(8, {0, 2}));
  CHECK(q.terms[2].is_full());
  // D4B has trivial multiplicative center, so the series stops at {1}.
  CHECK(upper_central_series(*fixtures::d4b()).terms.back() == ElemSet(8, {0}));
}

TEST_CASE("normalizers") {
  const auto s3c = fixtures::s3c();
  CHECK(normalizer(*s3c, fixtures::a3_in_s3()).is_full());
  CHECK(normalizer(*s3c, ElemSet(6, {0, 1})) == ElemSet(6, {0, 1}));
  const SeriesResult t = normalizer_tower(*s3c, ElemSet(6, {0, 1}));
  CHECK(t.terms.back() == ElemSet(6, {0, 1}));
  CHECK_FALSE(t.class_index.has_value());
  const SeriesResult ti = normalizer_tower(*s3c, fixtures::a3_in_s3());
  CHECK(ti.class_index == 1);

  for (const auto& a : corpus()) {
    const oracle::Raw r(a);
    for (const auto& h : all_subalgebras(a)) {
      const ElemSet n = normalizer(a, h);
      CHECK(is_subalgebra(a, n));
      CHECK(h.subset_of(n));
      if (is_ideal(a, h)) CHECK(n.is_full());
      std::set<Elem> expected;
      for (Elem g = 0; g < r.n; ++g) {
        bool ok = true;
        h.for_each([&](Elem x) { ok = ok && h.contains(r.conj(g, x)) && h.contains(r.s(g, x)); });
        if (ok) expected.insert(g);
      }
      CHECK(n == set_of(r.n, expected));
    }
  }
}

TEST_CASE("structure_report") {
  const CheckList d = structure_report(*fixtures::d4b());
  CHECK(d.all_passed());
  REQUIRE(d.find("lower_series_variants_agree") != nullptr);
  CHECK(d.find("lower_series_variants_agree")->outcome == Outcome::flagged);
  CHECK(d.find("maximal_subalgebras_are_ideals")->outcome == Outcome::vacuous);

  // Under the plain-bracket series D4B would count as nilpotent, yet a
  // maximal subalgebra fails to be an ideal and ^M[G, G] leaves the
  // Frattini subalgebra.
  CHECK_FALSE(is_ideal(*fixtures::d4b(), ElemSet(8, {0, 2, 4, 6})));
  CHECK_FALSE(pair_commutator(*fixtures::d4b(), ElemSet::full(8)).subset_of(frattini(*fixtures::d4b())));

  const CheckList s = structure_report(*fixtures::s3c());
  CHECK(s.all_passed());
  CHECK(s.find("commutator_in_frattini")->outcome == Outcome::vacuous);
  CHECK(s.find("center_commutator_in_frattini")->outcome == Outcome::passed);

  const CheckList t = structure_report(trivial_algebra());
  CHECK(t.all_passed());

  const CheckList q = structure_report(commutator_star(quaternion_group()));
  CHECK(q.all_passed());
  CHECK(q.find("maximal_subalgebras_are_ideals")->outcome == Outcome::passed);
  CHECK(q.find("normalizer_condition")->outcome == Outcome::passed);
}

TEST_CASE("algebras without proper nontrivial subalgebras have prime order") {
  for (const auto& g : builtin_groups(12)) {
    for (const auto& a : {commutator_star(g.group), trivial_star(g.group)}) {
      if (a.order() == 1) continue;
      if (all_subalgebras(a).size() != 2) continue;
      const auto n = a.order();
      bool prime = n > 1;
      for (std::size_t p = 2; p * p <= n; ++p) prime = prime && n % p != 0;
      CHECK(prime);
    }
  }
}
