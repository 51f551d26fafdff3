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

#include "mla/fixtures.hpp"
#include "mla/groups.hpp"
#include "mla/mla.hpp"
#include "mla/structure.hpp"
#include "oracle.hpp"

using namespace mla;

namespace {

FiniteMLA perturbed(const FiniteMLA& a, std::size_t i, std::size_t j, Elem v, bool star) {
  std::vector<Elem> g(a.group_table().begin(), a.group_table().end());
  std::vector<Elem> s(a.star_table().begin(), a.star_table().end());
  (star ? s : g)[i * a.order() + j] = v;
  return FiniteMLA(a.order(), std::move(g), std::move(s), a.names());
}

}  // namespace

TEST_CASE("verify_group") {
  CHECK(verify_group(cyclic_group(4)).ok());
  CHECK(verify_group(symmetric_group(3)).ok());

  // Row 1 copied from row 0: column 0 repeats at rows 0 and 1.
  const FiniteMLA z4 = cyclic_group(4);
  std::vector<Elem> g(z4.group_table().begin(), z4.group_table().end());
  for (int j = 0; j < 4; ++j) g[4 + j] = g[j];
  const Report r = verify_group(FiniteMLA(4, g, std::vector<Elem>(16, 0)));
  REQUIRE_FALSE(r.ok());
  CHECK(r.violation()->law == "latin square (column)");
  CHECK(r.violation()->witness == std::vector<Elem>{1, 0, 0});

  // A Latin square that is not associative.
  const std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                  3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const Report l = verify_group(FiniteMLA(5, loop, std::vector<Elem>(25, 0)));
  REQUIRE_FALSE(l.ok());
  CHECK(l.violation()->law == "associativity");
}

TEST_CASE("malformed tables are structural errors") {
  CHECK_THROWS_AS(FiniteMLA(2, {0, 1, 1}, {0, 0, 0, 0}), StructuralError);
  CHECK_THROWS_AS(FiniteMLA(2, {0, 1, 1, 2}, {0, 0, 0, 0}), StructuralError);
  CHECK_THROWS_AS(FiniteMLA(2, {0, 1, 1, 0}, {0, 0, 0, 0}, {"x", "x"}), StructuralError);
  CHECK_THROWS_AS(FiniteMLA(0, {}, {}), StructuralError);
}

TEST_CASE("verify_star_axioms") {
  CHECK(verify_star_axioms(trivial_star(cyclic_group(4))).ok());
  CHECK(verify_star_axioms(commutator_star(symmetric_group(3))).ok());
  CHECK(verify_star_axioms(*fixtures::v4a()).ok());
  CHECK(verify_star_axioms(*fixtures::d4b()).ok());

  // a * a = b on V4.
  const Report r = verify_star_axioms(perturbed(trivial_star(klein_four()), 1, 1, 2, true));
  REQUIRE_FALSE(r.ok());
  CHECK(r.violation()->law == "identity 1");
  CHECK(r.violation()->witness == std::vector<Elem>{1});
}

TEST_CASE("verify_star_axioms agrees with the naive checker on single-entry perturbations") {
  for (const auto& base : {*fixtures::s3c(), *fixtures::d4b(), *fixtures::v4a()}) {
    const auto n = base.order();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (Elem v = 0; v < n; v += 3) {
          const FiniteMLA p = perturbed(base, i, j, v, true);
          const int expected = oracle::failing_identity(oracle::Raw(p));
          const Report got = verify_star_axioms(p);
          CHECK(got.ok() == (expected == 0));
          if (!got.ok()) CHECK(got.violation()->law == "identity " + std::to_string(expected));
        }
  }
}

TEST_CASE("serial and parallel verification agree") {
  const FiniteMLA s3 = commutator_star(symmetric_group(3));
  for (std::size_t i = 1; i < 6; ++i) {
    const FiniteMLA p = perturbed(s3, i, (i + 2) % 6, static_cast<Elem>(i), true);
    CHECK(verify_star_axioms(p, Exec::serial).describe() ==
          verify_star_axioms(p, Exec::parallel).describe());
  }
}

TEST_CASE("Comm and TrivStar satisfy the identities on every builtin group up to order 12") {
  for (const auto& g : builtin_groups(12)) {
    CAPTURE(g.name);
    CHECK(verify_group(g.group).ok());
    CHECK(verify_star_axioms(trivial_star(g.group)).ok());
    CHECK(verify_star_axioms(commutator_star(g.group)).ok());
  }
}

TEST_CASE("g * 1 = 1 * g = 1 and antisymmetry on valid algebras") {
  for (const auto& g : builtin_groups(8)) {
    for (const auto& a : {commutator_star(g.group), trivial_star(g.group)}) {
      for (Elem x = 0; x < a.order(); ++x) {
        CHECK(a.star(x, 0) == 0);
        CHECK(a.star(0, x) == 0);
        for (Elem y = 0; y < a.order(); ++y) CHECK(a.star(y, x) == a.inv(a.star(x, y)));
      }
    }
  }
  const auto d4b = fixtures::d4b();
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) CHECK(d4b->star(y, x) == d4b->inv(d4b->star(x, y)));
}

TEST_CASE("verify_hom") {
  const MlaPtr s3 = fixtures::s3c();
  CHECK(verify_hom(identity_hom(s3)).ok());
  const MlaPtr z4 = share(trivial_star(cyclic_group(4)));
  CHECK(verify_hom(MLAHom{z4, z4, {0, 0, 0, 0}}).ok());
  // Sign map on S3 = 1 (12) (13) (23) (123) (132).
  const MLAHom sign{s3, fixtures::z2(), {0, 1, 1, 1, 0, 0}};
  CHECK(verify_hom(sign).ok());
  CHECK(kernel(sign) == fixtures::a3_in_s3());

  const Report bad = verify_hom(MLAHom{z4, z4, {0, 2, 1, 3}});
  CHECK_FALSE(bad.ok());
  CHECK(bad.violation()->law == "group product");
  CHECK_THROWS_AS(verify_hom(MLAHom{z4, z4, {0, 1}}), StructuralError);
}

TEST_CASE("quotient") {
  const MlaPtr s3 = fixtures::s3c();
  const Quotient q = quotient(s3, fixtures::a3_in_s3());
  CHECK(q.algebra->order() == 2);
  CHECK(q.algebra->has_trivial_star());
  CHECK(verify_star_axioms(*q.algebra).ok());
  CHECK(verify_hom(q.projection).ok());
  CHECK(q.representatives == std::vector<Elem>{0, 1});

  const Quotient same = quotient(s3, ElemSet(6, {0}));
  CHECK(same.algebra->order() == 6);
  CHECK(same.projection.map == identity_hom(s3).map);

  const MlaPtr z4 = share(trivial_star(cyclic_group(4)));
  const Quotient z2 = quotient(z4, ElemSet(4, {0, 2}));
  CHECK(z2.algebra->order() == 2);
  CHECK(*z2.algebra == trivial_star(cyclic_group(2)));

  CHECK_THROWS_AS(quotient(s3, ElemSet(6, {0, 1})), PreconditionError);
}

TEST_CASE("every quotient by an ideal of a small algebra is valid") {
  for (const auto& g : builtin_groups(8)) {
    const MlaPtr a = share(commutator_star(g.group));
    for (const auto& s : all_subalgebras(*a)) {
      if (!is_ideal(*a, s)) continue;
      const Quotient q = quotient(a, s);
      CHECK(verify_star_axioms(*q.algebra).ok());
      CHECK(verify_hom(q.projection).ok());
      CHECK(q.algebra->order() * s.count() == a->order());
    }
  }
}

TEST_CASE("direct_product") {
  const FiniteMLA z2 = trivial_star(cyclic_group(2));
  const FiniteMLA v = direct_product(z2, z2);
  CHECK(v.order() == 4);
  CHECK(v.has_trivial_star());
  CHECK(oracle::count_group_automorphisms(v) == 6);  // Aut(V4) = S3

  const FiniteMLA p = direct_product(*fixtures::v4a(), z2);
  CHECK(p.order() == 8);
  CHECK(verify_star_axioms(p).ok());
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      CHECK(p.star(x, y) % 2 == 0);
      CHECK(p.star(x, y) / 2 == fixtures::v4a()->star(x / 2, y / 2));
    }

  const FiniteMLA t = direct_product(*fixtures::s3c(), trivial_algebra());
  CHECK(t == *fixtures::s3c());
}
