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

// Mutual actions of two multiplicative Lie algebras on each other.

#pragma once

#include <vector>

#include "mla/mla.hpp"

namespace mla {

/// G acts on L and L acts on G, each through a group action and a bracket.
///
/// act_gl[g * |L| + l] = ^g l,    brk_gl[g * |L| + l] = <g, l> in L
/// act_lg[l * |G| + g] = ^l g,    brk_lg[l * |G| + g] = <l, g> in G
struct MutualAction {
  MlaPtr left;   // G
  MlaPtr right;  // L
  std::vector<Elem> act_gl;
  std::vector<Elem> brk_gl;
  std::vector<Elem> act_lg;
  std::vector<Elem> brk_lg;

  std::size_t g_order() const { return left->order(); }
  std::size_t l_order() const { return right->order(); }

  Elem gl(Elem g, Elem l) const { return act_gl[g * l_order() + l]; }
  Elem bgl(Elem g, Elem l) const { return brk_gl[g * l_order() + l]; }
  Elem lg(Elem l, Elem g) const { return act_lg[l * g_order() + g]; }
  Elem blg(Elem l, Elem g) const { return brk_lg[l * g_order() + g]; }
};

/// Throws StructuralError unless all four tables have the right shape and
/// entries in range.
void check_action_shape(const MutualAction& act);

/// Both actions trivial and both brackets identically 1.
MutualAction trivial_action(const MlaPtr& g, const MlaPtr& l);

/// A acting on itself: conjugation for both actions, the Lie product for
/// both brackets. Not assumed valid; submit it to the verifiers.
MutualAction conjugation_action(const MlaPtr& a);

/// Group-action laws (condition 0) followed by the four bracket conditions,
/// each checked G on L before L on G. The law names the condition and the
/// direction; the witness is the least failing element tuple.
Report verify_action(const MutualAction& act, Exec exec = Exec::parallel);

/// The five compatibility conditions, part (a) before part (b).
Report verify_compatibility(const MutualAction& act, Exec exec = Exec::parallel);

/// [<g,h>, h'] = <g ^h g^-1, h'> = (^g h h^-1) * h' for all g in G and
/// h, h' in L.
Report bracket_identity_check(const MutualAction& act, Exec exec = Exec::parallel);

}  // namespace mla
