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


#include "mla/fixtures.hpp"

#include "mla/enumeration.hpp"
#include "mla/groups.hpp"
#include "mla/io.hpp"

namespace mla::fixtures {
namespace {

MlaPtr first_completion(const FiniteMLA& group, Elem g, Elem h, Elem k) {
  Completion c = complete_partial_star(group, StarConstraint{{{g, h, k}}});
  if (c.algebras.empty()) throw StructuralError("fixture constraint has no completion");
  return share(std::move(c.algebras.front()));
}

RelativeExtension quotient_seed() {
  ProductExtension p = construct_product(identity_extension(s3c()), share(trivial_star(cyclic_group(4))));
  ElemSet k(p.ext.L->order(), {0, 2});
  return construct_quotient(p.ext, k).ext;
}

}  // namespace

MlaPtr v4a() { return first_completion(klein_four(), 1, 2, 1); }
MlaPtr d4b() { return first_completion(dihedral_group(4), 4, 1, 1); }
MlaPtr s3c() { return share(commutator_star(symmetric_group(3))); }
MlaPtr a5c() { return share(commutator_star(alternating_group(5))); }
MlaPtr z2() { return share(trivial_star(cyclic_group(2))); }
ElemSet a3_in_s3() { return ElemSet(6, {0, 4, 5}); }

std::vector<Seed> seeds() {
  const MlaPtr s = s3c();
  return {
      {"id_s3c", identity_extension(s)},
      {"id_d4b", identity_extension(d4b())},
      {"id_v4a", identity_extension(v4a())},
      {"incl_a3_s3c", inclusion_extension(s, a3_in_s3())},
      {"quot_s3c_z4", quotient_seed()},
  };
}

std::vector<File> canonical_files() {
  const std::vector<Seed> ss = seeds();
  std::vector<File> out;
  auto mla_file = [&](const std::string& stem, const FiniteMLA& a) {
    out.push_back({stem + ".mla", emit_mla(a)});
  };
  mla_file("v4a", *v4a());
  mla_file("d4b", *d4b());
  mla_file("s3c", *s3c());
  mla_file("z2", *z2());
  mla_file("a3", *ss[3].ext.L);
  mla_file("seed5_l", *ss[4].ext.L);
  mla_file("a5c", *a5c());
  mla_file("z1", trivial_algebra());
  const char* l_paths[] = {"s3c.mla", "d4b.mla", "v4a.mla", "a3.mla", "seed5_l.mla"};
  const char* g_paths[] = {"s3c.mla", "d4b.mla", "v4a.mla", "s3c.mla", "s3c.mla"};
  for (std::size_t i = 0; i < ss.size(); ++i) {
    out.push_back({ss[i].name + ".rlce", emit_rlce(ss[i].ext, l_paths[i], g_paths[i])});
  }
  return out;
}

}  // namespace mla::fixtures
