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

#include "mla/isoclinism.hpp"

#include <string>

#include "mla/enumeration.hpp"
#include "mla/kernels.hpp"

namespace mla {
namespace {

Report fail(std::string law, std::vector<Elem> witness, std::string detail = {}) {
  return Report::fail(Violation{std::move(law), std::move(witness), std::move(detail)});
}

template <class Law>
std::optional<std::vector<Elem>> pair_failure(Exec exec, std::size_t a, std::size_t b,
                                              Law&& law) {
  auto w = kernels::first_failure(exec, {a, b, 1}, [&](std::size_t i, std::size_t j, std::size_t) {
    return law(static_cast<Elem>(i), static_cast<Elem>(j));
  });
  if (!w) return std::nullopt;
  return std::vector<Elem>{static_cast<Elem>((*w)[0]), static_cast<Elem>((*w)[1])};
}

// ^g l l^-1
Elem twist(const RelativeExtension& e, Elem g, Elem l) {
  return e.L->mul(e.action.gl(g, l), e.L->inv(l));
}

std::vector<Elem> fiber_table(const RelativeExtension& e) {
  std::vector<Elem> first(e.G->order(), kNone);
  for (Elem l = e.L->order(); l-- > 0;) first[e.tau.map[l]] = l;
  return first;
}

// Extends a partial map on generators of a subgroup of L1 multiplicatively.
// Returns false on a conflict.
bool close_multiplicatively(const FiniteMLA& l1, const FiniteMLA& l2, std::vector<Elem>& beta) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < beta.size(); ++x)
    if (beta[x] != kNone) gens.push_back(x);
  if (beta[0] == kNone) beta[0] = 0;
  if (beta[0] != 0) return false;
  std::vector<Elem> stack{0};
  std::vector<char> seen(beta.size(), 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const Elem w = stack.back();
    stack.pop_back();
    for (Elem s : gens) {
      const Elem e = l1.mul(s, w);
      const Elem v = l2.mul(beta[s], beta[w]);
      if (beta[e] == kNone) {
        beta[e] = v;
      } else if (beta[e] != v) {
        return false;
      }
      if (!seen[e]) {
        seen[e] = 1;
        stack.push_back(e);
      }
    }
  }
  return true;
}

}  // namespace

Elem canonical_preimage(const RelativeExtension& e, Elem g) {
  for (Elem l = 0; l < e.L->order(); ++l)
    if (e.tau.map[l] == g) return l;
  return kNone;
}

Report verify_isoclinism(const RelativeExtension& e1, const RelativeExtension& e2,
                         const IsoclinismWitness& w, Exec exec) {
  check_extension_shape(e1);
  check_extension_shape(e2);
  const auto& G1 = *e1.G;
  const auto& G2 = *e2.G;
  const auto& L1 = *e1.L;
  const auto& L2 = *e2.L;
  const auto& th = w.theta.map;

  if (th.size() != G1.order() || !w.theta.target || w.theta.target->order() != G2.order()) {
    return fail("theta: carrier sizes", {});
  }
  for (Elem g = 0; g < th.size(); ++g)
    if (th[g] >= G2.order()) return fail("theta: image out of range", {g});
  if (auto r = verify_hom(MLAHom{e1.G, e2.G, th}, exec); !r) {
    Violation v = *r.violation();
    v.law = "theta: " + v.law;
    return Report::fail(std::move(v));
  }
  if (!is_bijective(MLAHom{e1.G, e2.G, th})) return fail("theta: not bijective", {});
  const ElemSet th_h = image(MLAHom{e1.G, e2.G, th}, e1.H);
  if (th_h != e2.H) return fail("theta(H1) = H2", {}, "theta(H1) = " + format_set(G2, th_h));

  const ElemSet c1 = g_commutator(e1);
  const ElemSet c2 = g_commutator(e2);
  const auto& beta = w.beta;
  if (beta.size() != L1.order()) return fail("beta: carrier size", {});
  ElemSet beta_img(L2.order());
  for (Elem l = 0; l < L1.order(); ++l) {
    if ((beta[l] != kNone) != c1.contains(l)) return fail("beta: domain is ^M{G1, L1}", {l});
    if (beta[l] == kNone) continue;
    if (beta[l] >= L2.order() || !c2.contains(beta[l])) {
      return fail("beta: image inside ^M{G2, L2}", {l});
    }
    beta_img.insert(beta[l]);
  }
  if (beta_img != c2 || c1.count() != c2.count()) return fail("beta: not bijective", {});
  for (Elem x : c1.members()) {
    for (Elem y : c1.members()) {
      if (beta[L1.mul(x, y)] != L2.mul(beta[x], beta[y])) return fail("beta: group product", {x, y});
      const Elem s = L1.star(x, y);
      if (beta[s] != kNone && beta[s] != L2.star(beta[x], beta[y])) {
        return fail("beta: lie product", {x, y});
      }
    }
  }

  const auto fiber2 = fiber_table(e2);
  if (auto bad = pair_failure(exec, G2.order(), L2.order(), [&](Elem g, Elem l) {
        const Elem p = fiber2[e2.tau.map[l]];
        return twist(e2, g, l) == twist(e2, g, p) && e2.action.bgl(g, l) == e2.action.bgl(g, p);
      }))
    return fail("well-definedness: choice of preimage in L2", *bad);

  auto partner = [&](Elem l1) { return fiber2[th[e1.tau.map[l1]]]; };
  for (Elem l = 0; l < L1.order(); ++l)
    if (partner(l) == kNone) return fail("theta tau1(l1) lies in tau2(L2)", {l});
  if (auto bad = pair_failure(exec, G1.order(), L1.order(), [&](Elem g, Elem l) {
        return beta[twist(e1, g, l)] == twist(e2, th[g], partner(l));
      }))
    return fail("beta(^g1 l1 l1^-1) = ^g2 l2 l2^-1", *bad);
  if (auto bad = pair_failure(exec, G1.order(), L1.order(), [&](Elem g, Elem l) {
        return beta[e1.action.bgl(g, l)] == e2.action.bgl(th[g], partner(l));
      }))
    return fail("beta(<g1, l1>) = <g2, l2>", *bad);
  return Report::pass();
}

std::optional<IsoclinismWitness> find_isoclinism(const RelativeExtension& e1,
                                                 const RelativeExtension& e2) {
  check_extension_shape(e1);
  check_extension_shape(e2);
  if (e1.G->order() != e2.G->order()) return std::nullopt;
  const auto& L1 = *e1.L;
  const auto& L2 = *e2.L;
  const auto fiber2 = fiber_table(e2);
  std::optional<IsoclinismWitness> found;

  for_each_isomorphism(e1.G, e2.G, [&](const MLAHom& theta) {
    if (image(theta, e1.H) != e2.H) return true;
    std::vector<Elem> beta(L1.order(), kNone);
    auto force = [&](Elem x, Elem v) {
      if (beta[x] == kNone) beta[x] = v;
      return beta[x] == v;
    };
    for (Elem g = 0; g < e1.G->order(); ++g) {
      for (Elem l = 0; l < L1.order(); ++l) {
        const Elem p = fiber2[theta.map[e1.tau.map[l]]];
        if (p == kNone) return true;
        if (!force(twist(e1, g, l), twist(e2, theta.map[g], p))) return true;
        if (!force(e1.action.bgl(g, l), e2.action.bgl(theta.map[g], p))) return true;
      }
    }
    if (!close_multiplicatively(L1, L2, beta)) return true;
    IsoclinismWitness w{theta, std::move(beta)};
    if (!verify_isoclinism(e1, e2, w, Exec::serial)) return true;
    found = std::move(w);
    return false;
  });
  return found;
}

IsoclinicMorphism verify_isoclinic_morphism(const RelativeExtension& e1,
                                            const RelativeExtension& e2,
                                            const ExtMorphism& m, Exec exec) {
  IsoclinicMorphism out{verify_morphism(e1, e2, m, exec), false, false};
  const ElemSet img = image(m.beta);
  out.mono = img.count() == e1.L->order();
  out.epi = img.is_full();
  if (!out.report) return out;
  const ElemSet c1 = g_commutator(e1);
  std::vector<Elem> beta(e1.L->order(), kNone);
  c1.for_each([&](Elem x) { beta[x] = m.beta.map[x]; });
  out.report = verify_isoclinism(e1, e2, IsoclinismWitness{m.theta, std::move(beta)}, exec);
  return out;
}

IsoclinismWitness inverse_witness(const RelativeExtension& e1, const RelativeExtension& e2,
                                  const IsoclinismWitness& w) {
  std::vector<Elem> beta(e2.L->order(), kNone);
  for (Elem l = 0; l < e1.L->order(); ++l)
    if (w.beta[l] != kNone) beta[w.beta[l]] = l;
  return IsoclinismWitness{inverse(w.theta), std::move(beta)};
}

IsoclinismWitness compose_witness(const IsoclinismWitness& w23, const IsoclinismWitness& w12) {
  std::vector<Elem> beta(w12.beta.size(), kNone);
  for (std::size_t l = 0; l < beta.size(); ++l)
    if (w12.beta[l] != kNone) beta[l] = w23.beta[w12.beta[l]];
  return IsoclinismWitness{compose(w23.theta, w12.theta), std::move(beta)};
}

CheckList lemma_suite(const RelativeExtension& e1, const RelativeExtension& e2,
                      const IsoclinismWitness& w) {
  const auto& L1 = *e1.L;
  const auto& L2 = *e2.L;
  const auto& th = w.theta.map;
  const auto& beta = w.beta;
  const ElemSet c1 = g_commutator(e1);
  const ElemSet c2 = g_commutator(e2);
  const auto members = c1.members();
  CheckList out;

  std::string bad;
  for (Elem x : members) {
    if (th[e1.tau.map[x]] != e2.tau.map[beta[x]]) {
      bad = "fails at " + L1.name(x);
      break;
    }
  }
  out.add("theta_tau1_equals_tau2_beta", bad.empty(), bad);

  ElemSet mapped(L2.order());
  (kernel(e1.tau) & c1).for_each([&](Elem x) { mapped.insert(beta[x]); });
  const ElemSet target = kernel(e2.tau) & c2;
  out.add("beta_matches_kernels", mapped == target,
          mapped == target ? std::string{}
                           : "beta image " + format_set(L2, mapped) + ", expected " +
                                 format_set(L2, target));

  bad.clear();
  const auto ng = e1.G->order();
  for (Elem g = 0; g < ng && bad.empty(); ++g)
    for (Elem g2 = 0; g2 < ng && bad.empty(); ++g2)
      for (Elem l : members) {
        for (Elem l2 : members) {
          const Elem lhs = beta[L1.mul(twist(e1, g, l), e1.action.bgl(g2, l2))];
          const Elem rhs = L2.mul(twist(e2, th[g], beta[l]), e2.action.bgl(th[g2], beta[l2]));
          if (lhs != rhs) {
            bad = "fails at (" + std::to_string(g) + ", " + std::to_string(g2) + ", " +
                  std::to_string(l) + ", " + std::to_string(l2) + ")";
            break;
          }
        }
        if (!bad.empty()) break;
      }
  out.add("beta_on_commutator_generators", bad.empty(), bad);
  return out;
}

CheckList equivalence_probe(const RelativeExtension& e1, const RelativeExtension& e2,
                            const IsoclinismWitness& w) {
  CheckList out;
  const PullbackExtension pb = construct_pullback(e1, e2, w.theta);
  const auto& P = pb.ext;
  const Report rp = verify_rlce(P);
  out.add("pullback_is_rlce", rp.ok(), rp.describe());

  auto record = [&](const char* name, const IsoclinicMorphism& m, bool want_epi) {
    const bool kind = want_epi ? m.epi : m.mono;
    std::string detail = m.report ? std::string{} : m.report.describe();
    if (!kind) detail += std::string(detail.empty() ? "" : "; ") + (want_epi ? "not onto" : "not injective");
    out.add(name, m.report.ok() && kind, detail);
  };
  record("first_projection_isoclinic_epi",
         verify_isoclinic_morphism(P, e1, ExtMorphism{identity_hom(e1.G), pb.to_first}), true);
  record("second_projection_isoclinic_epi",
         verify_isoclinic_morphism(P, e2, ExtMorphism{w.theta, pb.to_second}), true);

  // beta2 beta1^-1 on ^M{G1, L1} is again an isoclinism, and equals w.
  const ElemSet cp = g_commutator(P);
  std::vector<Elem> beta(e1.L->order(), kNone);
  bool consistent = true;
  cp.for_each([&](Elem p) {
    const Elem a = pb.to_first.map[p], b = pb.to_second.map[p];
    if (beta[a] != kNone && beta[a] != b) consistent = false;
    beta[a] = b;
  });
  const IsoclinismWitness rebuilt{w.theta, beta};
  const bool rebuilt_ok = consistent && verify_isoclinism(e1, e2, rebuilt).ok();
  out.add("projections_recombine_to_isoclinism", rebuilt_ok && beta == w.beta,
          !rebuilt_ok ? "recombined map is not an isoclinism"
                      : (beta == w.beta ? "" : "recombined beta differs from the witness"));

  const Quotient m = quotient(P.L, cp);
  const bool m_trivial = m.algebra->is_abelian() && m.algebra->has_trivial_star();
  out.add("fiber_product_mod_commutator_is_trivial", m_trivial);
  if (!m_trivial) {
    out.add("first_embedding_isoclinic_mono", false, "quotient is not abelian with trivial product");
    out.add("second_embedding_isoclinic_mono", false, "quotient is not abelian with trivial product");
    return out;
  }
  const auto nm = m.algebra->order();
  const ProductExtension x1 = construct_product(e1, m.algebra);
  const ProductExtension x2 = construct_product(e2, m.algebra);
  std::vector<Elem> into1(P.L->order()), into2(P.L->order());
  for (Elem p = 0; p < P.L->order(); ++p) {
    into1[p] = pb.to_first.map[p] * static_cast<Elem>(nm) + m.projection.map[p];
    into2[p] = pb.to_second.map[p] * static_cast<Elem>(nm) + m.projection.map[p];
  }
  record("first_embedding_isoclinic_mono",
         verify_isoclinic_morphism(
             P, x1.ext, ExtMorphism{identity_hom(e1.G), MLAHom{P.L, x1.ext.L, into1}}),
         false);
  record("second_embedding_isoclinic_mono",
         verify_isoclinic_morphism(P, x2.ext,
                                   ExtMorphism{w.theta, MLAHom{P.L, x2.ext.L, into2}}),
         false);
  return out;
}

}  // namespace mla
