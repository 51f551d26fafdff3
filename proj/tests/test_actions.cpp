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

#include "mla/actions.hpp"
#include "mla/fixtures.hpp"
#include "mla/groups.hpp"
#include "oracle.hpp"

using namespace mla;

namespace {

// The three sides of the bracket identity, evaluated from raw tables.
bool naive_bracket_identity(const MutualAction& act) {
  const oracle::Raw g(*act.left), l(*act.right);
  for (Elem x = 0; x < g.n; ++x)
    for (Elem h = 0; h < l.n; ++h)
      for (Elem h2 = 0; h2 < l.n; ++h2) {
        const Elem b = act.bgl(x, h);
        const Elem lhs = l.m(l.m(b, h2), l.m(l.inv(b), l.inv(h2)));
        const Elem mid = act.bgl(g.m(x, g.inv(act.lg(h, x))), h2);
        const Elem rhs = l.s(l.m(act.gl(x, h), l.inv(h)), h2);
        if (lhs != mid || mid != rhs) return false;
      }
  return true;
}

std::vector<MlaPtr> small_algebras() {
  std::vector<MlaPtr> out = {fixtures::s3c(), fixtures::d4b(), fixtures::v4a()};
  for (const auto& g : builtin_groups(8)) {
    out.push_back(share(commutator_star(g.group)));
    out.push_back(share(trivial_star(g.group)));
  }
  return out;
}

}  // namespace

TEST_CASE("trivial mutual action") {
  const MutualAction t = trivial_action(fixtures::z2(), fixtures::z2());
  CHECK(verify_action(t).ok());
  CHECK(verify_compatibility(t).ok());
  CHECK(bracket_identity_check(t).ok());
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) CHECK(t.bgl(x, y) == 0);
}

TEST_CASE("conjugation_action is the self-action with both brackets the Lie product") {
  const MlaPtr s3 = fixtures::s3c();
  const MutualAction c = conjugation_action(s3);
  for (Elem g = 0; g < 6; ++g)
    for (Elem h = 0; h < 6; ++h) {
      CHECK(c.gl(g, h) == s3->conj(g, h));
      CHECK(c.lg(g, h) == s3->conj(g, h));
      CHECK(c.bgl(g, h) == s3->star(g, h));
      CHECK(c.blg(g, h) == s3->star(g, h));
    }
  const MutualAction z = conjugation_action(share(trivial_star(cyclic_group(5))));
  for (Elem g = 0; g < 5; ++g)
    for (Elem h = 0; h < 5; ++h) {
      CHECK(z.gl(g, h) == h);
      CHECK(z.bgl(g, h) == 0);
    }
}

TEST_CASE("conjugation actions pass every verifier on small algebras") {
  for (const auto& a : small_algebras()) {
    const MutualAction c = conjugation_action(a);
    CHECK(verify_action(c).ok());
    CHECK(verify_compatibility(c).ok());
    CHECK(bracket_identity_check(c).ok());
    CHECK(naive_bracket_identity(c));
    for (Elem x = 0; x < a->order(); ++x) {
      CHECK(c.bgl(x, 0) == 0);
      CHECK(c.bgl(0, x) == 0);
    }
  }
}

TEST_CASE("perturbed actions are rejected with a witness") {
  const MlaPtr s3 = fixtures::s3c();
  MutualAction bracket = conjugation_action(s3);
  bracket.brk_gl[4 * 6 + 1] = 0;  // <(123), (12)> no longer the commutator
  const Report r = verify_action(bracket);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.violation()->witness.empty());
  CHECK(r.violation()->law.find("G on L") != std::string::npos);

  MutualAction backward = conjugation_action(s3);
  backward.brk_lg[4 * 6 + 1] = 0;
  const Report b = verify_action(backward);
  REQUIRE_FALSE(b.ok());
  CHECK(b.violation()->law.find("L on G") != std::string::npos);

  MutualAction act = conjugation_action(fixtures::d4b());
  std::swap(act.act_gl[1 * 8 + 4], act.act_gl[1 * 8 + 5]);
  CHECK_FALSE(verify_action(act).ok());

  // An action that is valid on its own but breaks compatibility: G acts on
  // L by conjugation while both brackets and the backward action are trivial.
  MutualAction mixed = trivial_action(s3, s3);
  const MutualAction conj = conjugation_action(s3);
  mixed.act_gl = conj.act_gl;
  CHECK(verify_action(mixed).ok());
  CHECK_FALSE(verify_compatibility(mixed).ok());
}

TEST_CASE("bracket identity agrees with the naive evaluation on perturbations") {
  const MlaPtr s3 = fixtures::s3c();
  for (std::size_t i = 0; i < 36; ++i) {
    MutualAction p = conjugation_action(s3);
    p.brk_gl[i] = static_cast<Elem>((p.brk_gl[i] + 1) % 6);
    CHECK(bracket_identity_check(p, Exec::serial).ok() == naive_bracket_identity(p));
    CHECK(bracket_identity_check(p, Exec::serial).describe() ==
          bracket_identity_check(p, Exec::parallel).describe());
  }
}

TEST_CASE("shape errors are structural") {
  MutualAction a = conjugation_action(fixtures::s3c());
  a.act_gl.pop_back();
  CHECK_THROWS_AS(check_action_shape(a), StructuralError);
  CHECK_THROWS_AS(verify_action(a), StructuralError);
  MutualAction b = conjugation_action(fixtures::s3c());
  b.brk_lg[0] = 6;
  CHECK_THROWS_AS(check_action_shape(b), StructuralError);
}
