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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <map>

#include "mla/fixtures.hpp"
#include "mla/groups.hpp"
#include "mla/io.hpp"

using namespace mla;

namespace {

const std::filesystem::path kDir = MLA_FIXTURE_DIR;

const char* kV4A =
    "mla 1\n"
    "order 4\n"
    "names 1 a b ab\n"
    "group\n"
    "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n"
    "star\n"
    "0 0 0 0\n0 0 1 1\n0 1 0 1\n0 1 1 0\n";

ParseError parse_error(const std::string& text) {
  try {
    parse_mla(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

ParseError rlce_error(const std::string& text, const Loader& loader) {
  try {
    parse_rlce(text, loader);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

std::string replace_line(std::string text, const std::string& prefix, const std::string& line) {
  const auto at = text.find("\n" + prefix) + 1;
  const auto end = text.find('\n', at);
  return text.replace(at, end - at, line);
}

Loader memory_loader() {
  std::map<std::string, MlaPtr> files = {{"s3c.mla", fixtures::s3c()}, {"a3.mla", nullptr}};
  return [files](const std::string& p) -> MlaPtr {
    auto it = files.find(p);
    if (it == files.end() || !it->second) throw StructuralError("no such file " + p);
    return it->second;
  };
}

}  // namespace

TEST_CASE("the V4A file parses to the fixture") {
  const FiniteMLA a = parse_mla(kV4A);
  CHECK(a == *fixtures::v4a());
  CHECK(emit_mla(a) == kV4A);
  CHECK(a.name(3) == "ab");
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string commented =
      "# V4 with a * b = a\n\nmla 1   # header\norder 4\n# names follow\nnames 1 a b ab\n"
      "group\n0 1 2 3\n\n1 0 3 2 # row 1\n2 3 0 1\n3 2 1 0\n#\nstar\n0 0 0 0\n0 0 1 1\n"
      "0 1 0 1\n\t0 1 1 0\r\n";
  CHECK(parse_mla(commented) == parse_mla(kV4A));
  CHECK(emit_mla(parse_mla(commented)) == kV4A);
}

TEST_CASE("names are optional") {
  const FiniteMLA z = parse_mla("mla 1\norder 2\ngroup\n0 1\n1 0\nstar\n0 0\n0 0\n");
  CHECK_FALSE(z.has_names());
  CHECK(z.name(1) == "1");
  CHECK(emit_mla(z) == "mla 1\norder 2\ngroup\n0 1\n1 0\nstar\n0 0\n0 0\n");
}

TEST_CASE("positioned parse errors") {
  const std::string base = kV4A;
  SUBCASE("bad header") {
    const ParseError e = parse_error("mlx 1\n" + base.substr(6));
    CHECK(e.line() == 1);
    CHECK(e.col() == 1);
  }
  SUBCASE("unsupported version") {
    const ParseError e = parse_error("mla 2\n" + base.substr(6));
    CHECK(e.line() == 1);
    CHECK(e.col() == 5);
    CHECK(std::string(e.what()).find("unsupported version") != std::string::npos);
  }
  SUBCASE("three group rows for order 4") {
    const std::string text = "mla 1\norder 4\ngroup\n0 1 2 3\n1 0 3 2\n2 3 0 1\nstar\n"
                             "0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n";
    const ParseError e = parse_error(text);
    CHECK(e.line() == 7);
    CHECK(e.col() == 1);
  }
  SUBCASE("short row") {
    const ParseError e = parse_error(replace_line(base, "1 0 3 2", "1 0 3"));
    CHECK(e.line() == 6);
    CHECK(e.col() == 6);
  }
  SUBCASE("index out of range") {
    const ParseError e = parse_error(replace_line(base, "0 0 1 1", "0 0 1 4"));
    CHECK(e.line() == 11);
    CHECK(e.col() == 7);
  }
  SUBCASE("identity not at 0") {
    const ParseError e = parse_error(replace_line(base, "2 3 0 1", "3 2 0 1"));
    CHECK(e.line() == 7);
    CHECK(e.col() == 1);
  }
  SUBCASE("wrong number of names") {
    const ParseError e = parse_error(replace_line(base, "names", "names 1 a b"));
    CHECK(e.line() == 3);
  }
  SUBCASE("duplicate name") {
    const ParseError e = parse_error(replace_line(base, "names", "names 1 a a ab"));
    CHECK(e.line() == 3);
    CHECK(e.col() == 11);
  }
  SUBCASE("missing star block") {
    const ParseError e = parse_error(base.substr(0, base.find("star")));
    CHECK(e.line() == 9);
  }
  SUBCASE("trailing content") {
    const ParseError e = parse_error(base + "extra\n");
    CHECK(e.line() == 14);
  }
  SUBCASE("not a number") {
    const ParseError e = parse_error(replace_line(base, "order", "order four"));
    CHECK(e.line() == 2);
    CHECK(e.col() == 7);
  }
}

TEST_CASE("parse errors are structural errors") {
  CHECK_THROWS_AS(parse_mla("mla 1\n"), StructuralError);
  CHECK_THROWS_AS(parse_mla(""), ParseError);
}

TEST_CASE("emit_mla rejects names it cannot write") {
  const FiniteMLA z = with_names(trivial_star(cyclic_group(2)), {"1", "x y"});
  CHECK_THROWS_AS(emit_mla(z), StructuralError);
  const FiniteMLA h = with_names(trivial_star(cyclic_group(2)), {"1", "x#"});
  CHECK_THROWS_AS(emit_mla(h), StructuralError);
}

TEST_CASE("rlce parsing") {
  const RelativeExtension id = identity_extension(fixtures::s3c());
  const std::string text = emit_rlce(id, "s3c.mla", "s3c.mla");
  const RelativeExtension back = parse_rlce(text, memory_loader());
  CHECK(back.L == back.G);
  CHECK(back.tau.map == id.tau.map);
  CHECK(back.H == id.H);
  CHECK(back.action.brk_gl == id.action.brk_gl);
  CHECK(verify_rlce(back).ok());
  CHECK(emit_rlce(back, "s3c.mla", "s3c.mla") == text);

  SUBCASE("tau of the wrong length") {
    const ParseError e = rlce_error(replace_line(text, "tau", "tau 0 1 2 3 4"), memory_loader());
    CHECK(e.line() == 5);
  }
  SUBCASE("H index out of range") {
    const ParseError e = rlce_error(replace_line(text, "H", "H 0 6"), memory_loader());
    CHECK(e.line() == 4);
    CHECK(e.col() == 5);
  }
  SUBCASE("unresolved reference") {
    const ParseError e = rlce_error(replace_line(text, "L", "L missing.mla"), memory_loader());
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
  }
  SUBCASE("act_lg with too few rows") {
    std::string cut = text;
    const auto at = cut.find("act_lg\n") + 7;
    cut.erase(at, cut.find('\n', at) - at + 1);
    CHECK_THROWS_AS(parse_rlce(cut, memory_loader()), ParseError);
  }
}

TEST_CASE("committed fixture files match the in-code emission byte for byte") {
  for (const auto& f : fixtures::canonical_files()) {
    CAPTURE(f.path);
    CHECK(read_file(kDir / f.path) == f.contents);
  }
}

TEST_CASE("every canonical file round-trips") {
  for (const auto& f : fixtures::canonical_files()) {
    CAPTURE(f.path);
    const std::filesystem::path p = kDir / f.path;
    if (p.extension() == ".mla") {
      CHECK(emit_mla(*load_mla(p)) == f.contents);
    } else {
      const auto lines = f.contents.substr(0, f.contents.find("\nH"));
      const auto l_path = lines.substr(lines.find("L ") + 2, lines.find('\n', lines.find("L ")) - lines.find("L ") - 2);
      const auto g_path = lines.substr(lines.find("G ") + 2);
      const RelativeExtension e = load_rlce(p);
      CHECK(emit_rlce(e, l_path, g_path) == f.contents);
      CHECK(verify_rlce(e).ok());
    }
  }
}

TEST_CASE("directory loader caches each file") {
  const Loader load = directory_loader(kDir);
  CHECK(load("s3c.mla") == load("s3c.mla"));
  CHECK_THROWS_AS(load("absent.mla"), StructuralError);
}
