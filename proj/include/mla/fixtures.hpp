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


// Named example algebras and extensions, and their canonical file set.

#pragma once

#include <string>
#include <vector>

#include "mla/extensions.hpp"

namespace mla::fixtures {

/// V4 with a * b = a: the first completion of that constraint.
MlaPtr v4a();
/// D4 with a * b = b (a the reflection, b the rotation).
MlaPtr d4b();
/// S3 with the commutator as Lie product.
MlaPtr s3c();
/// A5 with the commutator as Lie product.
MlaPtr a5c();
/// Z2 with trivial Lie product.
MlaPtr z2();
/// The subgroup {1, (123), (132)} of S3.
ElemSet a3_in_s3();

struct Seed {
  std::string name;
  RelativeExtension ext;
};

/// Identity extensions over S3C, D4B and V4A, the inclusion A3 into S3C,
/// and the quotient of S3C x Z4 -> S3C by {1} x {0, 2} (kernel of order 2).
std::vector<Seed> seeds();

struct File {
  std::string path;  // relative to the fixture directory
  std::string contents;
};

/// Every canonical fixture file, in emission order.
std::vector<File> canonical_files();

}  // namespace mla::fixtures
