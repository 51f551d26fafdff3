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

#include <algorithm>
#include <sstream>

#include "mla/kernels.hpp"
#include "mla/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mla {

std::string Report::describe() const {
  if (ok()) return "pass";
  std::ostringstream os;
  os << "fail: " << violation_->law;
  if (!violation_->witness.empty()) {
    os << " witness (";
    for (std::size_t i = 0; i < violation_->witness.size(); ++i) {
      if (i) os << ", ";
      os << violation_->witness[i];
    }
    os << ")";
  }
  if (!violation_->detail.empty()) os << ": " << violation_->detail;
  return os.str();
}

const char* outcome_label(Outcome o) {
  switch (o) {
    case Outcome::passed: return "pass";
    case Outcome::vacuous: return "vacuous";
    case Outcome::flagged: return "flag";
    case Outcome::failed: return "FAIL";
  }
  return "?";
}

void CheckList::append(const CheckList& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back({prefix + c.name, c.outcome, c.detail});
  }
}

bool CheckList::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.failed(); });
}

const Check* CheckList::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace kernels {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace kernels
}  // namespace mla
