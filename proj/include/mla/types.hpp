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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mla {

/// Element index into a finite carrier. Index 0 is always the identity.
using Elem = std::uint32_t;

inline constexpr Elem kNone = std::numeric_limits<Elem>::max();

/// Malformed input: table shapes, out-of-range indices, mismatched carriers.
/// Distinct from an axiom failure, which is reported through `Report`.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on arguments that violate its precondition
/// (e.g. quotient by a non-ideal). The message names the witness.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Refusal to run an exhaustive computation above the configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string law;
  std::vector<Elem> witness;
  std::string detail;
};

/// Outcome of a single verification: pass, or the first violation found.
class Report {
 public:
  static Report pass() { return Report{}; }
  static Report fail(Violation v) {
    Report r;
    r.violation_ = std::move(v);
    return r;
  }

  bool ok() const { return !violation_.has_value(); }
  explicit operator bool() const { return ok(); }
  const std::optional<Violation>& violation() const { return violation_; }

  std::string describe() const;

 private:
  std::optional<Violation> violation_;
};

enum class Outcome {
  passed,
  vacuous,   // hypothesis not met on this input
  flagged,   // informational finding, does not count as failure
  failed,
};

struct Check {
  std::string name;
  Outcome outcome = Outcome::passed;
  std::string detail;

  bool failed() const { return outcome == Outcome::failed; }
};

/// Ordered list of named checks, as produced by the multi-statement suites.
struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, Outcome outcome, std::string detail = {}) {
    checks.push_back({std::move(name), outcome, std::move(detail)});
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    add(std::move(name), ok ? Outcome::passed : Outcome::failed,
        std::move(detail));
  }
  void append(const CheckList& other, const std::string& prefix = {});

  bool all_passed() const;
  const Check* find(const std::string& name) const;
};

const char* outcome_label(Outcome o);

/// Execution strategy for the triple-loop verification kernels.
enum class Exec { serial, parallel };

}  // namespace mla
