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

// Isoclinism of relative Lie central extensions.

#pragma once

#include <optional>
#include <vector>

#include "mla/extensions.hpp"

namespace mla {

/// theta: G1 -> G2 and beta: ^M{G1, L1} -> ^M{G2, L2}. beta is stored over
/// all of L1 with kNone outside ^M{G1, L1}.
struct IsoclinismWitness {
  MLAHom theta;
  std::vector<Elem> beta;
};

/// Least element of the tau-fiber over g, or kNone when g is not in the
/// image.
Elem canonical_preimage(const RelativeExtension& e, Elem g);

/// Checks, in order: theta is an isomorphism with theta(H1) = H2; beta is
/// an isomorphism between the G-Lie commutators; the right-hand sides are
/// independent of the chosen preimages in L2; both defining equalities for
/// every (g1, l1). Every failure is reported, none thrown.
Report verify_isoclinism(const RelativeExtension& e1, const RelativeExtension& e2,
                         const IsoclinismWitness& w, Exec exec = Exec::parallel);

/// Searches theta over the isomorphisms G1 -> G2 with theta(H1) = H2; beta
/// is forced by the defining equalities and then verified. Returns the first
/// witness in search order.
std::optional<IsoclinismWitness> find_isoclinism(const RelativeExtension& e1,
                                                 const RelativeExtension& e2);

struct IsoclinicMorphism {
  Report report;
  bool mono = false;  // beta injective on L1
  bool epi = false;   // beta surjective onto L2
};

/// verify_morphism, then verify_isoclinism on (theta, beta restricted to
/// ^M{G1, L1}).
IsoclinicMorphism verify_isoclinic_morphism(const RelativeExtension& e1,
                                            const RelativeExtension& e2,
                                            const ExtMorphism& m, Exec exec = Exec::parallel);

/// The isoclinism (theta^-1, beta^-1) from E2 to E1.
IsoclinismWitness inverse_witness(const RelativeExtension& e1, const RelativeExtension& e2,
                                  const IsoclinismWitness& w);
/// Composition: first w12 from E1 to E2 and then w23 from E2 to E3.
IsoclinismWitness compose_witness(const IsoclinismWitness& w23, const IsoclinismWitness& w12);

/// The three consequences of an isoclinism: theta tau1 = tau2 beta on
/// ^M{G1, L1}; beta maps ker tau1 onto ker tau2 within the commutators; and
/// beta(^g l l^-1 <g', l'>) = ^theta(g) beta(l) beta(l)^-1 <theta(g'), beta(l')>
/// for l, l' in ^M{G1, L1}.
CheckList lemma_suite(const RelativeExtension& e1, const RelativeExtension& e2,
                      const IsoclinismWitness& w);

/// Realizes the equivalent characterizations for a found isoclinism: the
/// two projections out of the fiber product are isoclinic epimorphisms
/// and recombine to the witness; the maps n -> (n_i, n C) from the fiber
/// product into L_i x M, with C its G-Lie commutator and M the fiber
/// product modulo C, are isoclinic monomorphisms.
CheckList equivalence_probe(const RelativeExtension& e1, const RelativeExtension& e2,
                            const IsoclinismWitness& w);

}  // namespace mla
