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

// Text formats.
//
//   mla 1                       rlce 1
//   order <n>                   L <path>
//   names <n tokens>            G <path>
//   group                       H <indices into G>
//   <n rows of n indices>       tau <|L| indices into G>
//   star                        act_gl / brk_gl   (|G| rows of |L|)
//   <n rows of n indices>       act_lg / brk_lg   (|L| rows of |G|)
//
// `#` starts a comment anywhere on a line; blank lines are ignored. The
// `names` line is optional. Canonical emission uses single spaces and "\n".

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "mla/extensions.hpp"
#include "mla/mla.hpp"

namespace mla {

/// Malformed input text, positioned at a 1-based line and column.
class ParseError : public StructuralError {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& what)
      : StructuralError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                        ": " + what),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

FiniteMLA parse_mla(std::string_view text);
std::string emit_mla(const FiniteMLA& a);

/// Resolves the algebra paths referenced by an rlce file.
using Loader = std::function<MlaPtr(const std::string& path)>;

/// Assembles the extension; does not verify it.
RelativeExtension parse_rlce(std::string_view text, const Loader& loader);
std::string emit_rlce(const RelativeExtension& e, const std::string& l_path,
                      const std::string& g_path);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& contents);
MlaPtr load_mla(const std::filesystem::path& p);
/// Loader resolving paths relative to `base`, caching each file once.
Loader directory_loader(const std::filesystem::path& base);
RelativeExtension load_rlce(const std::filesystem::path& p);

}  // namespace mla
