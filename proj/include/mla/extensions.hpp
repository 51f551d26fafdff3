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

// Relative Lie central extensions tau: L -> G of a pair (H, G), their
// invariants, constructions and morphisms.

#pragma once

#include "mla/actions.hpp"
#include "mla/mla.hpp"
#include "mla/structure.hpp"

namespace mla {

struct RelativeExtension {
  MlaPtr L;
  MlaPtr G;
  MLAHom tau;  // L -> G
  ElemSet H;   // ideal of G
  MutualAction action;  // left = G, right = L
};

/// Throws StructuralError when the components do not fit together (carrier
/// mismatches, wrong table sizes, H over the wrong carrier).
void check_extension_shape(const RelativeExtension& e);

/// Preamble (tau is a homomorphism, H is an ideal, the action is valid and
/// compatible) followed by the four defining conditions. The law of a
/// failure starts with "preamble" or "condition k".
Report verify_rlce(const RelativeExtension& e, Exec exec = Exec::parallel);

/// L = G = A, tau = id, H = A, conjugation action.
RelativeExtension identity_extension(const MlaPtr& a);
/// L = H as an algebra, tau the inclusion, G acting by conjugation and the
/// Lie product. H must be an ideal.
RelativeExtension inclusion_extension(const MlaPtr& g, const ElemSet& h);

/// ^M{G, L}: subgroup of L generated by every ^g l l^-1 and <g, l>.
ElemSet g_commutator(const RelativeExtension& e);
/// Z(G, L) = { l : ^g l = l and <g, l> = 1 for all g }.
ElemSet g_center(const RelativeExtension& e);

/// ker tau inside the multiplicative center and inside the G-Lie center,
/// and both G-Lie invariants ideals of L.
CheckList kernel_checks(const RelativeExtension& e);

struct PerfectPair {
  bool lie_perfect = false;       // ^M{G, H} = H
  bool commutator_equal = false;  // ^M[G, H] = H
};

PerfectPair is_lie_perfect_pair(const MlaPtr& a, const ElemSet& h);

struct ProductExtension {
  RelativeExtension ext;  // L x K -> G
  MLAHom projection;      // L x K -> L
  MLAHom inclusion;       // L -> L x K
};

/// L x K with ^g(l, k) = (^g l, k), <g, (l, k)> = (<g, l>, 1) and the
/// L x K action on G through the first factor. K must be abelian with
/// trivial Lie product (else PreconditionError).
ProductExtension construct_product(const RelativeExtension& e, const MlaPtr& k);

struct RestrictionExtension {
  RelativeExtension ext;  // M -> G
  MLAHom inclusion;       // M -> L
  /// M ker(tau) = L. Holds whenever tau(M) = H.
  bool spans_with_kernel = false;
};

/// tau restricted to the subalgebra M. Requires tau(M) = H and M closed
/// under the G-action and the G-bracket (else PreconditionError).
RestrictionExtension construct_restriction(const RelativeExtension& e, const ElemSet& m);

struct QuotientExtension {
  RelativeExtension ext;  // L/K -> G
  MLAHom projection;      // L -> L/K
};

/// L/K with the induced actions. K must be an ideal of L inside ker(tau);
/// well-definedness of the induced tables is checked, and a failure throws
/// PreconditionError with the witness.
QuotientExtension construct_quotient(const RelativeExtension& e, const ElemSet& k);

struct PullbackExtension {
  RelativeExtension ext;  // fiber product -> G1
  MLAHom to_first;        // fiber product -> L1
  MLAHom to_second;       // fiber product -> L2
};

/// Fiber product { (l1, l2) : theta tau1(l1) = tau2(l2) } over G1. theta
/// must be an isomorphism with theta(H1) = H2 (else PreconditionError).
PullbackExtension construct_pullback(const RelativeExtension& e1,
                                     const RelativeExtension& e2, const MLAHom& theta);

struct ExtMorphism {
  MLAHom theta;  // G1 -> G2
  MLAHom beta;   // L1 -> L2
};

/// theta and beta are homomorphisms, theta(H1) = H2,
/// beta(^M{G1, L1}) = ^M{G2, L2}, and theta tau1 = tau2 beta on L1.
Report verify_morphism(const RelativeExtension& e1, const RelativeExtension& e2,
                       const ExtMorphism& m, Exec exec = Exec::parallel);

/// I ideal of L; I in Z(G, L) and ^M{G, L}; L/I isomorphic to H; I
/// isomorphic to the certificate. The certificate must be abelian with
/// trivial Lie product (else StructuralError).
CheckList covering_pair_check(const RelativeExtension& e, const ElemSet& i,
                              const FiniteMLA& certificate);

/// ^M{G, L} = L when (H, G) is Lie perfect, ker(tau) lies in
/// Z(G, L) and ^M{G, L}, and L/ker(tau) is isomorphic to H. Vacuous when
/// the hypotheses fail.
Check perfect_cover_check(const RelativeExtension& e);

}  // namespace mla
