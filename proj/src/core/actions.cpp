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

#include "mla/actions.hpp"

#include <functional>
#include <string>

#include "mla/kernels.hpp"

namespace mla {
namespace {

// One direction of a mutual action: P acts on Q, with the bracket P x Q -> Q.
// The reverse direction is the same view with the roles swapped.
struct Side {
  const FiniteMLA& p;
  const FiniteMLA& q;
  std::function<Elem(Elem, Elem)> act_pq;
  std::function<Elem(Elem, Elem)> act_qp;
  std::function<Elem(Elem, Elem)> brk_pq;
  std::function<Elem(Elem, Elem)> brk_qp;
  const char* label;
};

Side forward(const MutualAction& a) {
  return Side{*a.left,
              *a.right,
              [&a](Elem g, Elem l) { return a.gl(g, l); },
              [&a](Elem l, Elem g) { return a.lg(l, g); },
              [&a](Elem g, Elem l) { return a.bgl(g, l); },
              [&a](Elem l, Elem g) { return a.blg(l, g); },
              "G on L"};
}

Side backward(const MutualAction& a) {
  return Side{*a.right,
              *a.left,
              [&a](Elem l, Elem g) { return a.lg(l, g); },
              [&a](Elem g, Elem l) { return a.gl(g, l); },
              [&a](Elem l, Elem g) { return a.blg(l, g); },
              [&a](Elem g, Elem l) { return a.bgl(g, l); },
              "L on G"};
}

using Law = std::function<bool(Elem, Elem, Elem)>;

// Runs one law over the box and converts the least failing triple.
std::optional<Violation> scan(Exec exec, const kernels::Extents& ext,
                              const std::string& law, const Law& f) {
  auto w = kernels::first_failure(exec, ext, [&](std::size_t i, std::size_t j, std::size_t k) {
    return f(static_cast<Elem>(i), static_cast<Elem>(j), static_cast<Elem>(k));
  });
  if (!w) return std::nullopt;
  return Violation{law, {static_cast<Elem>((*w)[0]), static_cast<Elem>((*w)[1]),
                         static_cast<Elem>((*w)[2])}, {}};
}

std::string law_name(const std::string& what, const Side& s) {
  return what + " (" + s.label + ")";
}

std::optional<Violation> group_action_laws(const Side& s, Exec exec) {
  const auto np = s.p.order(), nq = s.q.order();
  const auto& p = s.p;
  const auto& q = s.q;
  if (auto v = scan(exec, {1, nq, 1}, law_name("condition 0: identity acts trivially", s),
                    [&](Elem, Elem y, Elem) { return s.act_pq(0, y) == y; })) {
    v->witness = {v->witness[1]};
    return v;
  }
  if (auto v = scan(exec, {np, np, nq}, law_name("condition 0: composition", s),
                    [&](Elem x, Elem x2, Elem y) {
                      return s.act_pq(p.mul(x, x2), y) == s.act_pq(x, s.act_pq(x2, y));
                    }))
    return v;
  if (auto v = scan(exec, {np, nq, nq}, law_name("condition 0: group automorphism", s),
                    [&](Elem x, Elem y, Elem y2) {
                      return s.act_pq(x, q.mul(y, y2)) == q.mul(s.act_pq(x, y), s.act_pq(x, y2));
                    }))
    return v;
  if (auto v = scan(exec, {np, nq, nq}, law_name("condition 0: lie automorphism", s),
                    [&](Elem x, Elem y, Elem y2) {
                      return s.act_pq(x, q.star(y, y2)) == q.star(s.act_pq(x, y), s.act_pq(x, y2));
                    }))
    return v;
  return std::nullopt;
}

// Bracket condition k of the action of P on Q.
std::optional<Violation> bracket_condition(int k, const Side& s, Exec exec) {
  const auto np = s.p.order(), nq = s.q.order();
  const auto& p = s.p;
  const auto& q = s.q;
  const auto name = law_name("condition " + std::to_string(k), s);
  switch (k) {
    case 1:  // <g, hh'> = <g, h> <^h g, ^h h'>
      return scan(exec, {np, nq, nq}, name, [&](Elem g, Elem h, Elem h2) {
        return s.brk_pq(g, q.mul(h, h2)) ==
               q.mul(s.brk_pq(g, h), s.brk_pq(s.act_qp(h, g), q.conj(h, h2)));
      });
    case 2:  // <gg', h> = <^g g', ^g h> <g, h>
      return scan(exec, {np, np, nq}, name, [&](Elem g, Elem g2, Elem h) {
        return s.brk_pq(p.mul(g, g2), h) ==
               q.mul(s.brk_pq(p.conj(g, g2), s.act_pq(g, h)), s.brk_pq(g, h));
      });
    case 3:  // <g * g', ^g' h> <^h g, <g', h>>^-1 <^g g', <g, h>^-1>^-1 = 1
      return scan(exec, {np, np, nq}, name, [&](Elem g, Elem g2, Elem h) {
        const Elem t1 = s.brk_pq(p.star(g, g2), s.act_pq(g2, h));
        const Elem t2 = q.inv(s.brk_pq(s.act_qp(h, g), s.brk_pq(g2, h)));
        const Elem t3 = q.inv(s.brk_pq(p.conj(g, g2), q.inv(s.brk_pq(g, h))));
        return q.mul(q.mul(t1, t2), t3) == 0;
      });
    default:  // <^h' g, h * h'> (^h h' * <g, h>) (^g h * <g, h'>^-1) = 1
      return scan(exec, {np, nq, nq}, name, [&](Elem g, Elem h, Elem h2) {
        const Elem t1 = s.brk_pq(s.act_qp(h2, g), q.star(h, h2));
        const Elem t2 = q.star(q.conj(h, h2), s.brk_pq(g, h));
        const Elem t3 = q.star(s.act_pq(g, h), q.inv(s.brk_pq(g, h2)));
        return q.mul(q.mul(t1, t2), t3) == 0;
      });
  }
}

// Compatibility condition k for one side; part (a) is the forward side.
std::optional<Violation> compat_condition(int k, const Side& s, const char* part,
                                          Exec exec) {
  const auto np = s.p.order(), nq = s.q.order();
  const auto& p = s.p;
  const auto& q = s.q;
  const auto name = "compatibility " + std::to_string(k) + part + " (" + s.label + ")";
  switch (k) {
    case 1:  // ^(^g h) g' = ^g(^h(^(g^-1) g'))
      return scan(exec, {np, nq, np}, name, [&](Elem g, Elem h, Elem g2) {
        return s.act_qp(s.act_pq(g, h), g2) ==
               p.conj(g, s.act_qp(h, p.conj(p.inv(g), g2)));
      });
    case 2:  // <<h, g>^-1, h'> = <g, h> * h'
      return scan(exec, {np, nq, nq}, name, [&](Elem g, Elem h, Elem h2) {
        return s.brk_pq(p.inv(s.brk_qp(h, g)), h2) == q.star(s.brk_pq(g, h), h2);
      });
    case 4:  // ^g <h, g'> = <^g h, ^g g'>
      return scan(exec, {np, nq, np}, name, [&](Elem g, Elem h, Elem g2) {
        return p.conj(g, s.brk_qp(h, g2)) == s.brk_qp(s.act_pq(g, h), p.conj(g, g2));
      });
    default:  // <g ^h g^-1, h'> = (^g h h^-1) * h'
      return scan(exec, {np, nq, nq}, name, [&](Elem g, Elem h, Elem h2) {
        return s.brk_pq(p.mul(g, s.act_qp(h, p.inv(g))), h2) ==
               q.star(q.mul(s.act_pq(g, h), q.inv(h)), h2);
      });
  }
}

}  // namespace

void check_action_shape(const MutualAction& act) {
  if (!act.left || !act.right) throw StructuralError("action without algebras");
  const auto ng = act.g_order(), nl = act.l_order();
  auto check = [&](const std::vector<Elem>& t, const char* name, std::size_t bound) {
    if (t.size() != ng * nl) {
      throw StructuralError(std::string(name) + " has " + std::to_string(t.size()) +
                            " entries, expected " + std::to_string(ng * nl));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= bound) {
        throw StructuralError(std::string(name) + " entry " + std::to_string(i) +
                              " out of range");
      }
    }
  };
  check(act.act_gl, "act_gl", nl);
  check(act.brk_gl, "brk_gl", nl);
  check(act.act_lg, "act_lg", ng);
  check(act.brk_lg, "brk_lg", ng);
}

MutualAction trivial_action(const MlaPtr& g, const MlaPtr& l) {
  const auto ng = g->order(), nl = l->order();
  MutualAction a{g, l, std::vector<Elem>(ng * nl), std::vector<Elem>(ng * nl, 0),
                 std::vector<Elem>(ng * nl), std::vector<Elem>(ng * nl, 0)};
  for (Elem x = 0; x < ng; ++x)
    for (Elem y = 0; y < nl; ++y) {
      a.act_gl[x * nl + y] = y;
      a.act_lg[y * ng + x] = x;
    }
  return a;
}

MutualAction conjugation_action(const MlaPtr& a) {
  const auto n = a->order();
  MutualAction act{a, a, std::vector<Elem>(n * n), std::vector<Elem>(n * n),
                   std::vector<Elem>(n * n), std::vector<Elem>(n * n)};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      act.act_gl[x * n + y] = act.act_lg[x * n + y] = a->conj(x, y);
      act.brk_gl[x * n + y] = act.brk_lg[x * n + y] = a->star(x, y);
    }
  return act;
}

Report verify_action(const MutualAction& act, Exec exec) {
  check_action_shape(act);
  const Side fw = forward(act), bw = backward(act);
  for (const Side* s : {&fw, &bw})
    if (auto v = group_action_laws(*s, exec)) return Report::fail(*v);
  for (int k = 1; k <= 4; ++k)
    for (const Side* s : {&fw, &bw})
      if (auto v = bracket_condition(k, *s, exec)) return Report::fail(*v);
  return Report::pass();
}

Report verify_compatibility(const MutualAction& act, Exec exec) {
  check_action_shape(act);
  const Side fw = forward(act), bw = backward(act);
  const auto& g = *act.left;
  const auto& l = *act.right;
  const auto ng = g.order(), nl = l.order();
  for (int k = 1; k <= 5; ++k) {
    if (k != 3) {
      if (auto v = compat_condition(k, fw, "a", exec)) return Report::fail(*v);
      if (auto v = compat_condition(k, bw, "b", exec)) return Report::fail(*v);
      continue;
    }
    // Both parts act by <g, h> after <h, g>, exactly as displayed.
    if (auto v = scan(exec, {ng, nl, nl}, "compatibility 3a (G on L)",
                      [&](Elem x, Elem h, Elem h2) {
                        return l.conj(act.bgl(x, h), act.gl(act.blg(h, x), h2)) == h2;
                      }))
      return Report::fail(*v);
    if (auto v = scan(exec, {ng, nl, ng}, "compatibility 3b (L on G)",
                      [&](Elem x, Elem h, Elem g2) {
                        return act.lg(act.bgl(x, h), g.conj(act.blg(h, x), g2)) == g2;
                      }))
      return Report::fail(*v);
  }
  return Report::pass();
}

Report bracket_identity_check(const MutualAction& act, Exec exec) {
  check_action_shape(act);
  const auto& g = *act.left;
  const auto& l = *act.right;
  auto commutator_side = [&](Elem x, Elem h, Elem h2) { return l.comm(act.bgl(x, h), h2); };
  auto bracket_side = [&](Elem x, Elem h, Elem h2) {
    return act.bgl(g.mul(x, act.lg(h, g.inv(x))), h2);
  };
  auto star_side = [&](Elem x, Elem h, Elem h2) {
    return l.star(l.mul(act.gl(x, h), l.inv(h)), h2);
  };
  const kernels::Extents ext{g.order(), l.order(), l.order()};
  if (auto v = scan(exec, ext, "bracket identity: [<g,h>, h'] = <g ^h g^-1, h'>", [&](Elem x, Elem h, Elem h2) {
        return commutator_side(x, h, h2) == bracket_side(x, h, h2);
      }))
    return Report::fail(*v);
  if (auto v = scan(exec, ext, "bracket identity: <g ^h g^-1, h'> = (^g h h^-1) * h'", [&](Elem x, Elem h, Elem h2) {
        return bracket_side(x, h, h2) == star_side(x, h, h2);
      }))
    return Report::fail(*v);
  return Report::pass();
}

}  // namespace mla
