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

#include "mla/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <sstream>
#include <vector>

namespace mla {
namespace {

struct Token {
  std::string text;
  std::size_t col;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
  std::size_t end_col;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}, raw.size() + 1};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t t = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > t) line.tokens.push_back({std::string(raw.substr(t, i - t)), t + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(lex(text)) {}

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek(const std::string& expected) const {
    if (done()) {
      const std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(last, 1, "unexpected end of input, expected " + expected);
    }
    return lines_[pos_];
  }
  const Line& next(const std::string& expected) {
    const Line& l = peek(expected);
    ++pos_;
    return l;
  }
  bool at_keyword(const std::string& kw) const {
    return !done() && lines_[pos_].tokens[0].text == kw;
  }

  // A line "kw arg..." with exactly `args` arguments (any number if npos).
  const Line& keyword(const std::string& kw, std::size_t args = 0) {
    const Line& l = next("'" + kw + "'");
    if (l.tokens[0].text != kw) {
      throw ParseError(l.number, l.tokens[0].col,
                       "expected '" + kw + "', found '" + l.tokens[0].text + "'");
    }
    if (args != std::string::npos && l.tokens.size() != args + 1) {
      const auto& t = l.tokens.size() > args + 1 ? l.tokens[args + 1] : l.tokens.back();
      throw ParseError(l.number, l.tokens.size() > args + 1 ? t.col : l.end_col,
                       "'" + kw + "' takes " + std::to_string(args) + " argument(s)");
    }
    return l;
  }

  void finish(const std::string& what) const {
    if (!done()) {
      const Line& l = lines_[pos_];
      throw ParseError(l.number, l.tokens[0].col, "unexpected content after " + what);
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::size_t parse_index(const Line& l, const Token& t, std::size_t bound, const std::string& what) {
  std::size_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) {
    throw ParseError(l.number, t.col, "expected a non-negative integer, found '" + t.text + "'");
  }
  if (v >= bound) {
    throw ParseError(l.number, t.col,
                     what + " " + t.text + " out of range (must be < " + std::to_string(bound) + ")");
  }
  return v;
}

void header(Cursor& c, const std::string& kind) {
  const Line& l = c.next("header '" + kind + " 1'");
  if (l.tokens[0].text != kind) {
    throw ParseError(l.number, l.tokens[0].col, "expected header '" + kind + " 1'");
  }
  if (l.tokens.size() < 2) throw ParseError(l.number, l.end_col, "missing format version");
  if (l.tokens[1].text != "1") {
    throw ParseError(l.number, l.tokens[1].col, "unsupported version '" + l.tokens[1].text + "'");
  }
  if (l.tokens.size() > 2) throw ParseError(l.number, l.tokens[2].col, "unexpected token");
}

struct Block {
  std::vector<Elem> values;
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // (line, col) per entry
};

// `rows` lines of `cols` indices each, every index < bound.
Block rows_of(Cursor& c, const std::string& name, std::size_t rows, std::size_t cols,
              std::size_t bound) {
  Block b;
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& l = c.next(std::to_string(rows) + " rows of '" + name + "'");
    if (l.tokens.size() != cols) {
      const bool keyword = !l.tokens.empty() && !std::isdigit(static_cast<unsigned char>(l.tokens[0].text[0]));
      if (keyword) {
        throw ParseError(l.number, l.tokens[0].col,
                         "'" + name + "' has " + std::to_string(r) + " rows, expected " +
                             std::to_string(rows));
      }
      throw ParseError(l.number, l.tokens.size() > cols ? l.tokens[cols].col : l.end_col,
                       "row " + std::to_string(r) + " of '" + name + "' has " +
                           std::to_string(l.tokens.size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (const auto& t : l.tokens) {
      b.values.push_back(static_cast<Elem>(parse_index(l, t, bound, "index")));
      b.positions.emplace_back(l.number, t.col);
    }
  }
  return b;
}

std::string join_row(std::span<const Elem> row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(row[i]);
  }
  return out;
}

void emit_rows(std::ostringstream& os, std::span<const Elem> table, std::size_t cols) {
  for (std::size_t i = 0; i < table.size(); i += cols) os << join_row(table.subspan(i, cols)) << '\n';
}

}  // namespace

FiniteMLA parse_mla(std::string_view text) {
  Cursor c(text);
  header(c, "mla");
  const Line& ol = c.keyword("order", 1);
  const std::size_t n = parse_index(ol, ol.tokens[1], std::numeric_limits<Elem>::max(), "order");
  if (n == 0) throw ParseError(ol.number, ol.tokens[1].col, "order must be positive");

  std::vector<std::string> names;
  if (c.at_keyword("names")) {
    const Line& nl = c.keyword("names", std::string::npos);
    if (nl.tokens.size() != n + 1) {
      throw ParseError(nl.number, nl.tokens.size() > n + 1 ? nl.tokens[n + 1].col : nl.end_col,
                       "expected " + std::to_string(n) + " names, got " +
                           std::to_string(nl.tokens.size() - 1));
    }
    std::set<std::string> seen;
    for (std::size_t i = 1; i < nl.tokens.size(); ++i) {
      if (!seen.insert(nl.tokens[i].text).second) {
        throw ParseError(nl.number, nl.tokens[i].col, "duplicate name '" + nl.tokens[i].text + "'");
      }
      names.push_back(nl.tokens[i].text);
    }
  }
  c.keyword("group");
  Block group = rows_of(c, "group", n, n, n);
  c.keyword("star");
  Block star = rows_of(c, "star", n, n, n);
  c.finish("the star block");

  for (std::size_t j = 0; j < n; ++j) {
    if (group.values[j] != j) {
      auto [line, col] = group.positions[j];
      throw ParseError(line, col, "identity must be element 0: 0 * " + std::to_string(j) + " != " +
                                      std::to_string(j));
    }
    if (group.values[j * n] != j) {
      auto [line, col] = group.positions[j * n];
      throw ParseError(line, col, "identity must be element 0: " + std::to_string(j) +
                                      " * 0 != " + std::to_string(j));
    }
  }
  return FiniteMLA(n, std::move(group.values), std::move(star.values), std::move(names));
}

std::string emit_mla(const FiniteMLA& a) {
  std::ostringstream os;
  const auto n = a.order();
  os << "mla 1\norder " << n << '\n';
  if (a.has_names()) {
    os << "names";
    for (const auto& s : a.names()) {
      if (s.empty() || s.find_first_of(" \t\r\n#") != std::string::npos) {
        throw StructuralError("element name '" + s + "' cannot be written");
      }
      os << ' ' << s;
    }
    os << '\n';
  }
  os << "group\n";
  emit_rows(os, a.group_table(), n);
  os << "star\n";
  emit_rows(os, a.star_table(), n);
  return os.str();
}

RelativeExtension parse_rlce(std::string_view text, const Loader& loader) {
  Cursor c(text);
  header(c, "rlce");
  auto load = [&](const char* kw) {
    const Line& l = c.keyword(kw, 1);
    try {
      return loader(l.tokens[1].text);
    } catch (const std::exception& ex) {
      throw ParseError(l.number, l.tokens[1].col,
                       "cannot load '" + l.tokens[1].text + "': " + ex.what());
    }
  };
  const MlaPtr L = load("L");
  const MlaPtr G = load("G");
  const auto nl = L->order(), ng = G->order();

  const Line& hl = c.keyword("H", std::string::npos);
  ElemSet h(ng);
  for (std::size_t i = 1; i < hl.tokens.size(); ++i) {
    h.insert(static_cast<Elem>(parse_index(hl, hl.tokens[i], ng, "H index")));
  }
  const Line& tl = c.keyword("tau", std::string::npos);
  if (tl.tokens.size() != nl + 1) {
    throw ParseError(tl.number, tl.tokens.size() > nl + 1 ? tl.tokens[nl + 1].col : tl.end_col,
                     "tau has " + std::to_string(tl.tokens.size() - 1) + " entries, expected " +
                         std::to_string(nl));
  }
  std::vector<Elem> tau;
  for (std::size_t i = 1; i < tl.tokens.size(); ++i) {
    tau.push_back(static_cast<Elem>(parse_index(tl, tl.tokens[i], ng, "tau value")));
  }
  c.keyword("act_gl");
  auto act_gl = rows_of(c, "act_gl", ng, nl, nl).values;
  c.keyword("brk_gl");
  auto brk_gl = rows_of(c, "brk_gl", ng, nl, nl).values;
  c.keyword("act_lg");
  auto act_lg = rows_of(c, "act_lg", nl, ng, ng).values;
  c.keyword("brk_lg");
  auto brk_lg = rows_of(c, "brk_lg", nl, ng, ng).values;
  c.finish("the brk_lg block");

  MutualAction act{G, L, std::move(act_gl), std::move(brk_gl), std::move(act_lg), std::move(brk_lg)};
  return RelativeExtension{L, G, MLAHom{L, G, std::move(tau)}, std::move(h), std::move(act)};
}

std::string emit_rlce(const RelativeExtension& e, const std::string& l_path,
                      const std::string& g_path) {
  check_extension_shape(e);
  std::ostringstream os;
  os << "rlce 1\nL " << l_path << "\nG " << g_path << "\nH";
  e.H.for_each([&](Elem x) { os << ' ' << x; });
  os << "\ntau " << join_row(e.tau.map) << '\n';
  const auto ng = e.G->order(), nl = e.L->order();
  os << "act_gl\n";
  emit_rows(os, e.action.act_gl, nl);
  os << "brk_gl\n";
  emit_rows(os, e.action.brk_gl, nl);
  os << "act_lg\n";
  emit_rows(os, e.action.act_lg, ng);
  os << "brk_lg\n";
  emit_rows(os, e.action.brk_lg, ng);
  return os.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& contents) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + p.string());
  out << contents;
}

MlaPtr load_mla(const std::filesystem::path& p) { return share(parse_mla(read_file(p))); }

Loader directory_loader(const std::filesystem::path& base) {
  auto cache = std::make_shared<std::map<std::string, MlaPtr>>();
  return [base, cache](const std::string& path) {
    auto it = cache->find(path);
    if (it != cache->end()) return it->second;
    MlaPtr a = load_mla(base / path);
    (*cache)[path] = a;
    return a;
  };
}

RelativeExtension load_rlce(const std::filesystem::path& p) {
  return parse_rlce(read_file(p), directory_loader(p.parent_path()));
}

}  // namespace mla
