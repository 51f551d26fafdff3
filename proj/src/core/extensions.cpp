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

#include "mla/extensions.hpp"

#include <stdexcept>
#include <string>

#include "mla/enumeration.hpp"
#include "mla/kernels.hpp"

namespace mla {
namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

Report relabel(const Report& r, const std::string& prefix) {
  Violation v = *r.violation();
  v.law = prefix + v.law;
  return Report::fail(std::move(v));
}

Report fail(std::string law, std::vector<Elem> witness, std::string detail = {}) {
  return Report::fail(Violation{std::move(law), std::move(witness), std::move(detail)});
}

// Least failing pair (i, j) over [0, a) x [0, b).
template <class Law>
std::optional<std::vector<Elem>> pair_failure(Exec exec, std::size_t a, std::size_t b,
                                              Law&& law) {
  auto w = kernels::first_failure(exec, {a, b, 1}, [&](std::size_t i, std::size_t j, std::size_t) {
    return law(static_cast<Elem>(i), static_cast<Elem>(j));
  });
  if (!w) return std::nullopt;
  return std::vector<Elem>{static_cast<Elem>((*w)[0]), static_cast<Elem>((*w)[1])};
}

Elem least_difference(const ElemSet& a, const ElemSet& b) {
  return ((a - b) | (b - a)).first();
}

void require_same_order(const FiniteMLA& a, const FiniteMLA& b, const char* what) {
  if (a.order() != b.order()) throw StructuralError(std::string(what) + ": carrier sizes differ");
}

MLAHom map_hom(const MlaPtr& s, const MlaPtr& t, std::vector<Elem> map) {
  return MLAHom{s, t, std::move(map)};
}

}  // namespace

void check_extension_shape(const RelativeExtension& e) {
  if (!e.L || !e.G) throw StructuralError("extension without algebras");
  if (!e.tau.source || !e.tau.target) throw StructuralError("tau without carriers");
  require_same_order(*e.tau.source, *e.L, "tau source and L");
  require_same_order(*e.tau.target, *e.G, "tau target and G");
  if (e.tau.map.size() != e.L->order()) throw StructuralError("tau has the wrong length");
  if (e.H.universe() != e.G->order()) throw StructuralError("H is not a subset of G");
  if (!e.action.left || !e.action.right) throw StructuralError("action without algebras");
  require_same_order(*e.action.left, *e.G, "action left side and G");
  require_same_order(*e.action.right, *e.L, "action right side and L");
  check_action_shape(e.action);
}

Report verify_rlce(const RelativeExtension& e, Exec exec) {
  check_extension_shape(e);
  const auto& L = *e.L;
  const auto& G = *e.G;
  const auto& act = e.action;
  const auto nl = L.order(), ng = G.order();
  auto tau = [&](Elem l) { return e.tau.map[l]; };

  if (auto r = verify_hom(e.tau, exec); !r) return relabel(r, "preamble: tau: ");
  if (auto v = ideal_violation(G, e.H)) {
    return fail("preamble: H is an ideal: " + v->law, v->witness, v->detail);
  }
  if (auto r = verify_action(act, exec); !r) return relabel(r, "preamble: action: ");
  if (auto r = verify_compatibility(act, exec); !r) return relabel(r, "preamble: ");

  const ElemSet img = image(e.tau);
  if (img != e.H) {
    return fail("condition 1: tau(L) = H", {least_difference(img, e.H)},
                "tau(L) = " + format_set(G, img));
  }
  const ElemSet ker = kernel(e.tau);
  for (Elem g = 0; g < ng; ++g) {
    for (Elem k : ker.members()) {
      if (act.gl(g, k) != k) return fail("condition 1: ^g k = k on ker tau", {g, k});
      if (act.bgl(g, k) != 0) return fail("condition 1: <g, k> = 1 on ker tau", {g, k});
    }
  }

  if (auto w = pair_failure(exec, ng, nl, [&](Elem g, Elem l) {
        return tau(act.gl(g, l)) == G.conj(g, tau(l));
      }))
    return fail("condition 2: tau(^g l) = g tau(l) g^-1", *w);
  if (auto w = pair_failure(exec, ng, nl, [&](Elem g, Elem l) {
        return tau(act.bgl(g, l)) == G.star(g, tau(l));
      }))
    return fail("condition 2: tau(<g, l>) = g * tau(l)", *w);

  if (auto w = pair_failure(exec, nl, nl, [&](Elem l, Elem l2) {
        return act.gl(tau(l), l2) == L.conj(l, l2);
      }))
    return fail("condition 3: ^tau(l) l' = l l' l^-1", *w);
  if (auto w = pair_failure(exec, nl, nl, [&](Elem l, Elem l2) {
        return act.bgl(tau(l), l2) == L.star(l, l2);
      }))
    return fail("condition 3: <tau(l), l'> = l * l'", *w);

  if (auto w = pair_failure(exec, nl, ng, [&](Elem l, Elem g) {
        return act.lg(l, g) == G.conj(tau(l), g);
      }))
    return fail("condition 4: ^l g = ^tau(l) g", *w);
  if (auto w = pair_failure(exec, nl, ng, [&](Elem l, Elem g) {
        return act.blg(l, g) == G.star(tau(l), g);
      }))
    return fail("condition 4: <l, g> = tau(l) * g", *w);
  return Report::pass();
}

RelativeExtension identity_extension(const MlaPtr& a) {
  return RelativeExtension{a, a, identity_hom(a), ElemSet::full(a->order()),
                           conjugation_action(a)};
}

RelativeExtension inclusion_extension(const MlaPtr& g, const ElemSet& h) {
  if (auto v = ideal_violation(*g, h)) {
    throw PreconditionError("inclusion extension of a non-ideal: " + v->law);
  }
  const Embedded emb = induced_subalgebra(g, h);
  const auto& L = emb.algebra;
  const auto& up = emb.embedding.map;
  const auto ng = g->order(), nl = L->order();
  std::vector<Elem> down(ng, kNone);
  for (std::size_t i = 0; i < nl; ++i) down[up[i]] = static_cast<Elem>(i);

  MutualAction act{g, L, std::vector<Elem>(ng * nl), std::vector<Elem>(ng * nl),
                   std::vector<Elem>(ng * nl), std::vector<Elem>(ng * nl)};
  for (Elem x = 0; x < ng; ++x)
    for (Elem l = 0; l < nl; ++l) {
      act.act_gl[x * nl + l] = down[g->conj(x, up[l])];
      act.brk_gl[x * nl + l] = down[g->star(x, up[l])];
      act.act_lg[l * ng + x] = g->conj(up[l], x);
      act.brk_lg[l * ng + x] = g->star(up[l], x);
    }
  return RelativeExtension{L, g, emb.embedding, h, std::move(act)};
}

ElemSet g_commutator(const RelativeExtension& e) {
  check_extension_shape(e);
  const auto& L = *e.L;
  ElemSet gens(L.order());
  for (Elem g = 0; g < e.G->order(); ++g)
    for (Elem l = 0; l < L.order(); ++l) {
      gens.insert(L.mul(e.action.gl(g, l), L.inv(l)));
      gens.insert(e.action.bgl(g, l));
    }
  return gen_subgroup(L, gens);
}

ElemSet g_center(const RelativeExtension& e) {
  check_extension_shape(e);
  ElemSet out(e.L->order());
  for (Elem l = 0; l < e.L->order(); ++l) {
    bool central = true;
    for (Elem g = 0; g < e.G->order() && central; ++g)
      central = e.action.gl(g, l) == l && e.action.bgl(g, l) == 0;
    if (central) out.insert(l);
  }
  return out;
}

CheckList kernel_checks(const RelativeExtension& e) {
  const auto& L = *e.L;
  const ElemSet ker = kernel(e.tau);
  const ElemSet mz = centers(L).multiplicative;
  const ElemSet zbar = g_center(e);
  const ElemSet comm = g_commutator(e);
  CheckList out;
  auto detail = [&](const ElemSet& inner, const ElemSet& outer) {
    const ElemSet extra = inner - outer;
    return extra.empty() ? std::string{} : "outside: " + format_set(L, extra);
  };
  out.add("kernel_in_multiplicative_center", ker.subset_of(mz), detail(ker, mz));
  out.add("kernel_in_g_center", ker.subset_of(zbar), detail(ker, zbar));
  out.add("g_commutator_is_ideal", is_ideal(L, comm));
  out.add("g_center_is_ideal", is_ideal(L, zbar));
  return out;
}

PerfectPair is_lie_perfect_pair(const MlaPtr& a, const ElemSet& h) {
  if (auto v = ideal_violation(*a, h)) throw PreconditionError("pair with a non-ideal: " + v->law);
  const RelativeExtension inc = inclusion_extension(a, h);
  PerfectPair out;
  out.lie_perfect = g_commutator(inc).is_full();
  out.commutator_equal = pair_commutator(*a, h) == h;
  return out;
}

ProductExtension construct_product(const RelativeExtension& e, const MlaPtr& k) {
  check_extension_shape(e);
  if (!k->is_abelian() || !k->has_trivial_star()) {
    throw PreconditionError("product factor must be abelian with trivial Lie product");
  }
  const auto& act = e.action;
  const auto ng = e.G->order(), nl = e.L->order(), nk = k->order(), n = nl * nk;
  auto lk = share(direct_product(*e.L, *k));

  std::vector<Elem> tau(n);
  for (std::size_t x = 0; x < n; ++x) tau[x] = e.tau.map[x / nk];
  MutualAction p{e.G, lk, std::vector<Elem>(ng * n), std::vector<Elem>(ng * n),
                 std::vector<Elem>(ng * n), std::vector<Elem>(ng * n)};
  for (Elem g = 0; g < ng; ++g)
    for (Elem l = 0; l < nl; ++l)
      for (Elem c = 0; c < nk; ++c) {
        const Elem x = l * static_cast<Elem>(nk) + c;
        p.act_gl[g * n + x] = act.gl(g, l) * static_cast<Elem>(nk) + c;
        p.brk_gl[g * n + x] = act.bgl(g, l) * static_cast<Elem>(nk);
        p.act_lg[x * ng + g] = act.lg(l, g);
        p.brk_lg[x * ng + g] = act.blg(l, g);
      }

  std::vector<Elem> proj(n), incl(nl);
  for (std::size_t x = 0; x < n; ++x) proj[x] = static_cast<Elem>(x / nk);
  for (std::size_t l = 0; l < nl; ++l) incl[l] = static_cast<Elem>(l * nk);
  RelativeExtension out{lk, e.G, map_hom(lk, e.G, std::move(tau)), e.H, std::move(p)};
  return ProductExtension{std::move(out), map_hom(lk, e.L, std::move(proj)),
                          map_hom(e.L, lk, std::move(incl))};
}

RestrictionExtension construct_restriction(const RelativeExtension& e, const ElemSet& m) {
  check_extension_shape(e);
  const auto& L = *e.L;
  if (m.universe() != L.order()) throw StructuralError("M is not a subset of L");
  if (auto v = subalgebra_violation(L, m)) {
    throw PreconditionError("restriction to a non-subalgebra: " + v->law);
  }
  const ElemSet img = image(e.tau, m);
  if (img != e.H) {
    throw PreconditionError("restriction needs tau(M) = H; tau(M) = " + format_set(*e.G, img));
  }
  const auto& act = e.action;
  const auto ng = e.G->order();
  for (Elem g = 0; g < ng; ++g) {
    for (Elem x : m.members()) {
      if (!m.contains(act.gl(g, x)) || !m.contains(act.bgl(g, x))) {
        throw PreconditionError("M is not invariant under the action of G: g = " + idx(g) +
                                ", m = " + idx(x));
      }
    }
  }

  const Embedded emb = induced_subalgebra(e.L, m);
  const auto& M = emb.algebra;
  const auto& up = emb.embedding.map;
  const auto nm = M->order();
  std::vector<Elem> down(L.order(), kNone);
  for (std::size_t i = 0; i < nm; ++i) down[up[i]] = static_cast<Elem>(i);

  MutualAction r{e.G, M, std::vector<Elem>(ng * nm), std::vector<Elem>(ng * nm),
                 std::vector<Elem>(ng * nm), std::vector<Elem>(ng * nm)};
  std::vector<Elem> tau(nm);
  for (Elem x = 0; x < nm; ++x) {
    tau[x] = e.tau.map[up[x]];
    for (Elem g = 0; g < ng; ++g) {
      r.act_gl[g * nm + x] = down[act.gl(g, up[x])];
      r.brk_gl[g * nm + x] = down[act.bgl(g, up[x])];
      r.act_lg[x * ng + g] = act.lg(up[x], g);
      r.brk_lg[x * ng + g] = act.blg(up[x], g);
    }
  }

  const ElemSet ker = kernel(e.tau);
  ElemSet span(L.order());
  for (Elem x : m.members()) ker.for_each([&](Elem k) { span.insert(L.mul(x, k)); });

  RestrictionExtension out{
      RelativeExtension{M, e.G, map_hom(M, e.G, std::move(tau)), e.H, std::move(r)},
      emb.embedding, span.is_full()};
  return out;
}

QuotientExtension construct_quotient(const RelativeExtension& e, const ElemSet& k) {
  check_extension_shape(e);
  const auto& L = *e.L;
  if (k.universe() != L.order()) throw StructuralError("K is not a subset of L");
  const ElemSet ker = kernel(e.tau);
  if (!k.subset_of(ker)) {
    throw PreconditionError("quotient needs K inside ker tau; " + idx((k - ker).first()) +
                            " is not in the kernel");
  }
  const Quotient q = quotient(e.L, k);
  const auto& Q = q.algebra;
  const auto& cls = q.projection.map;
  const auto& reps = q.representatives;
  const auto& act = e.action;
  const auto ng = e.G->order(), nq = Q->order();

  MutualAction r{e.G, Q, std::vector<Elem>(ng * nq), std::vector<Elem>(ng * nq),
                 std::vector<Elem>(ng * nq), std::vector<Elem>(ng * nq)};
  std::vector<Elem> tau(nq);
  for (Elem c = 0; c < nq; ++c) {
    tau[c] = e.tau.map[reps[c]];
    for (Elem g = 0; g < ng; ++g) {
      r.act_gl[g * nq + c] = cls[act.gl(g, reps[c])];
      r.brk_gl[g * nq + c] = cls[act.bgl(g, reps[c])];
      r.act_lg[c * ng + g] = act.lg(reps[c], g);
      r.brk_lg[c * ng + g] = act.blg(reps[c], g);
    }
  }
  auto ill_defined = [&](const char* what, Elem g, Elem m) {
    return PreconditionError(std::string("induced ") + what + " is not well defined at g = " +
                             idx(g) + ", m = " + idx(m));
  };
  for (Elem m = 0; m < L.order(); ++m) {
    const Elem c = cls[m];
    if (e.tau.map[m] != tau[c]) throw ill_defined("tau", 0, m);
    for (Elem g = 0; g < ng; ++g) {
      if (cls[act.gl(g, m)] != r.act_gl[g * nq + c]) throw ill_defined("action on L/K", g, m);
      if (cls[act.bgl(g, m)] != r.brk_gl[g * nq + c]) throw ill_defined("bracket on L/K", g, m);
      if (act.lg(m, g) != r.act_lg[c * ng + g]) throw ill_defined("action on G", g, m);
      if (act.blg(m, g) != r.brk_lg[c * ng + g]) throw ill_defined("bracket on G", g, m);
    }
  }
  RelativeExtension out{Q, e.G, map_hom(Q, e.G, std::move(tau)), e.H, std::move(r)};
  return QuotientExtension{std::move(out), q.projection};
}

PullbackExtension construct_pullback(const RelativeExtension& e1, const RelativeExtension& e2,
                                     const MLAHom& theta) {
  check_extension_shape(e1);
  check_extension_shape(e2);
  require_same_order(*theta.source, *e1.G, "theta source and G1");
  require_same_order(*theta.target, *e2.G, "theta target and G2");
  if (auto r = verify_hom(theta); !r) {
    throw PreconditionError("theta is not a homomorphism: " + r.describe());
  }
  if (!is_bijective(theta)) throw PreconditionError("theta is not an isomorphism");
  if (image(theta, e1.H) != e2.H) throw PreconditionError("theta(H1) != H2");

  const auto& L1 = *e1.L;
  const auto& L2 = *e2.L;
  const auto n1 = L1.order(), n2 = L2.order(), ng = e1.G->order();
  auto prod = share(direct_product(L1, L2));
  ElemSet fiber(n1 * n2);
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b)
      if (theta.map[e1.tau.map[a]] == e2.tau.map[b]) fiber.insert(a * static_cast<Elem>(n2) + b);
  if (!is_subalgebra(*prod, fiber)) {
    throw std::logic_error("fiber product is not a subalgebra of L1 x L2");
  }
  const Embedded emb = induced_subalgebra(prod, fiber);
  const auto& P = emb.algebra;
  const auto& up = emb.embedding.map;
  const auto np = P->order();
  std::vector<Elem> down(n1 * n2, kNone);
  for (std::size_t i = 0; i < np; ++i) down[up[i]] = static_cast<Elem>(i);

  MutualAction r{e1.G, P, std::vector<Elem>(ng * np), std::vector<Elem>(ng * np),
                 std::vector<Elem>(ng * np), std::vector<Elem>(ng * np)};
  std::vector<Elem> tau(np), first(np), second(np);
  for (Elem x = 0; x < np; ++x) {
    const Elem a = up[x] / static_cast<Elem>(n2), b = up[x] % static_cast<Elem>(n2);
    first[x] = a;
    second[x] = b;
    tau[x] = e1.tau.map[a];
    for (Elem g = 0; g < ng; ++g) {
      const Elem g2 = theta.map[g];
      const Elem acted = down[e1.action.gl(g, a) * n2 + e2.action.gl(g2, b)];
      const Elem bracket = down[e1.action.bgl(g, a) * n2 + e2.action.bgl(g2, b)];
      if (acted == kNone || bracket == kNone) {
        throw PreconditionError("action of G1 leaves the fiber product at g = " + idx(g));
      }
      r.act_gl[g * np + x] = acted;
      r.brk_gl[g * np + x] = bracket;
      r.act_lg[x * ng + g] = e1.action.lg(a, g);
      r.brk_lg[x * ng + g] = e1.action.blg(a, g);
    }
  }
  RelativeExtension out{P, e1.G, map_hom(P, e1.G, std::move(tau)), e1.H, std::move(r)};
  return PullbackExtension{std::move(out), map_hom(P, e1.L, std::move(first)),
                           map_hom(P, e2.L, std::move(second))};
}

Report verify_morphism(const RelativeExtension& e1, const RelativeExtension& e2,
                       const ExtMorphism& m, Exec exec) {
  check_extension_shape(e1);
  check_extension_shape(e2);
  require_same_order(*m.theta.source, *e1.G, "theta source and G1");
  require_same_order(*m.theta.target, *e2.G, "theta target and G2");
  require_same_order(*m.beta.source, *e1.L, "beta source and L1");
  require_same_order(*m.beta.target, *e2.L, "beta target and L2");
  if (auto r = verify_hom(m.theta, exec); !r) return relabel(r, "theta: ");
  if (auto r = verify_hom(m.beta, exec); !r) return relabel(r, "beta: ");
  const ElemSet th = image(m.theta, e1.H);
  if (th != e2.H) {
    return fail("theta(H1) = H2", {least_difference(th, e2.H)},
                "theta(H1) = " + format_set(*e2.G, th));
  }
  const ElemSet c2 = g_commutator(e2);
  const ElemSet bc = image(m.beta, g_commutator(e1));
  if (bc != c2) {
    return fail("beta(^M{G1, L1}) = ^M{G2, L2}", {least_difference(bc, c2)},
                "beta image = " + format_set(*e2.L, bc));
  }
  for (Elem l = 0; l < e1.L->order(); ++l) {
    if (m.theta.map[e1.tau.map[l]] != e2.tau.map[m.beta.map[l]]) {
      return fail("theta tau1 = tau2 beta", {l});
    }
  }
  return Report::pass();
}

CheckList covering_pair_check(const RelativeExtension& e, const ElemSet& i,
                              const FiniteMLA& certificate) {
  check_extension_shape(e);
  if (!certificate.is_abelian() || !certificate.has_trivial_star() ||
      !verify_group(certificate)) {
    throw StructuralError("multiplier certificate must be an abelian group with trivial Lie product");
  }
  const auto& L = *e.L;
  if (i.universe() != L.order()) throw StructuralError("I is not a subset of L");
  CheckList out;
  const auto v = ideal_violation(L, i);
  out.add("ideal", !v.has_value(), v ? v->law : std::string{});

  const ElemSet bound = g_center(e) & g_commutator(e);
  const ElemSet extra = i - bound;
  out.add("inside_center_and_commutator", extra.empty(),
          extra.empty() ? std::string{} : "outside: " + format_set(L, extra));

  if (v) {
    out.add("quotient_isomorphic_to_H", false, "I is not an ideal");
    out.add("isomorphic_to_certificate", false, "I is not an ideal");
    return out;
  }
  const Quotient q = quotient(e.L, i);
  const Embedded h = induced_subalgebra(e.G, e.H);
  out.add("quotient_isomorphic_to_H", find_isomorphism(q.algebra, h.algebra).has_value());
  const Embedded sub = induced_subalgebra(e.L, i);
  out.add("isomorphic_to_certificate",
          find_isomorphism(sub.algebra, share(certificate)).has_value());
  return out;
}

Check perfect_cover_check(const RelativeExtension& e) {
  check_extension_shape(e);
  const char* name = "g_commutator_equals_L";
  std::string unmet;
  if (!is_ideal(*e.G, e.H) || !is_lie_perfect_pair(e.G, e.H).lie_perfect) {
    unmet += "(H, G) is not a Lie perfect pair; ";
  }
  const ElemSet ker = kernel(e.tau);
  const ElemSet comm = g_commutator(e);
  if (!ker.subset_of(g_center(e) & comm)) {
    unmet += "ker tau is not inside the G-Lie center and commutator; ";
  }
  if (!is_ideal(*e.G, e.H) ||
      !find_isomorphism(quotient(e.L, ker).algebra, induced_subalgebra(e.G, e.H).algebra)) {
    unmet += "L / ker tau is not isomorphic to H; ";
  }
  if (!unmet.empty()) {
    unmet.resize(unmet.size() - 2);
    return Check{name, Outcome::vacuous, unmet};
  }
  if (comm.is_full()) return Check{name, Outcome::passed, {}};
  return Check{name, Outcome::failed, "^M{G, L} = " + format_set(*e.L, comm)};
}

}  // namespace mla
