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


#include "mla/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <sstream>

#include "mla/enumeration.hpp"
#include "mla/extensions.hpp"
#include "mla/fixtures.hpp"
#include "mla/io.hpp"
#include "mla/isoclinism.hpp"
#include "mla/structure.hpp"

namespace mla {
namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int status(bool ok) { return ok ? kPass : kFail; }

bool print_report(std::ostream& out, const std::string& label, const Report& r) {
  out << label << ": " << r.describe() << '\n';
  return r.ok();
}

bool print_checks(std::ostream& out, const CheckList& list, const std::string& indent = "  ") {
  for (const auto& c : list.checks) {
    out << indent << "[" << outcome_label(c.outcome) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return list.all_passed();
}

std::string format_series(const FiniteMLA& a, const SeriesResult& s) {
  std::string line;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) line += " > ";
    line += format_set(a, s.terms[i]);
  }
  if (!s.stabilized) line += " (not stabilized)";
  return line;
}

std::string format_map(const FiniteMLA& src, const FiniteMLA& dst, const std::vector<Elem>& map) {
  std::string line;
  for (Elem x = 0; x < map.size(); ++x) {
    if (map[x] == kNone) continue;
    if (!line.empty()) line += ", ";
    line += src.name(x) + "->" + dst.name(map[x]);
  }
  return line;
}

Elem parse_elem(const std::string& s, std::size_t bound, const std::string& what) {
  std::size_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw UsageError(what + ": expected an index, got '" + s + "'");
  }
  if (v >= bound) {
    throw UsageError(what + ": index " + s + " out of range (must be < " + std::to_string(bound) + ")");
  }
  return static_cast<Elem>(v);
}

// check <mla>
int cmd_check(const std::string& path, std::ostream& out) {
  const MlaPtr a = load_mla(path);
  out << "order: " << a->order() << '\n';
  if (!print_report(out, "group", verify_group(*a))) return kFail;
  return status(print_report(out, "lie product", verify_star_axioms(*a)));
}

// report <mla>
int cmd_report(const std::string& path, std::ostream& out) {
  const MlaPtr a = load_mla(path);
  const Limits limits = Limits::from_env();
  out << "order: " << a->order() << '\n';
  if (!print_report(out, "axioms", verify_star_axioms(*a))) return kFail;
  const ElemSet all = ElemSet::full(a->order());
  const Centers c = centers(*a);
  out << "center: " << format_set(*a, c.group) << '\n';
  out << "lie center: " << format_set(*a, c.lie) << '\n';
  out << "multiplicative center: " << format_set(*a, c.multiplicative) << '\n';
  out << "commutator: " << format_set(*a, pair_commutator(*a, all)) << '\n';
  out << "group commutator: " << format_set(*a, group_commutator(*a, all)) << '\n';
  out << "lower central series: " << format_series(*a, lower_central_series(*a)) << '\n';
  out << "upper central series: " << format_series(*a, upper_central_series(*a)) << '\n';
  const auto cls = nilpotency_class(*a);
  out << "nilpotency class: " << (cls ? std::to_string(*cls) : std::string("none")) << '\n';
  out << "frattini: " << format_set(*a, frattini(*a, limits)) << '\n';
  out << "normalizer condition: "
      << (satisfies_normalizer_condition(*a, limits) ? "yes" : "no") << '\n';
  out << "structure checks:\n";
  return status(print_checks(out, structure_report(*a, limits)));
}

// subalgebras <mla>
int cmd_subalgebras(const std::string& path, std::ostream& out) {
  const MlaPtr a = load_mla(path);
  if (!print_report(out, "axioms", verify_star_axioms(*a))) return kFail;
  const auto subs = all_subalgebras(*a, Limits::from_env());
  out << "subalgebras: " << subs.size() << '\n';
  for (const auto& s : subs) {
    out << "  " << format_set(*a, s) << " order=" << s.count();
    if (is_ideal(*a, s)) out << " ideal";
    out << '\n';
  }
  return kPass;
}

// enumerate --group <mla> [--constraint i,j,k]... [--count]
int cmd_enumerate(const std::string& path, const std::vector<std::string>& constraints,
                  bool count_only, std::ostream& out) {
  const MlaPtr g = load_mla(path);
  if (!print_report(out, "group", verify_group(*g))) return kFail;
  StarConstraint c;
  for (const auto& text : constraints) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    if (parts.size() != 3) throw UsageError("--constraint expects i,j,k, got '" + text + "'");
    c.pairs.push_back({parse_elem(parts[0], g->order(), "--constraint"),
                       parse_elem(parts[1], g->order(), "--constraint"),
                       parse_elem(parts[2], g->order(), "--constraint")});
  }
  const Limits limits = Limits::from_env();
  Completion result = c.pairs.empty() ? Completion{enumerate_stars(*g, limits), {}}
                                      : complete_partial_star(*g, c, limits);
  out << "completions: " << result.algebras.size() << '\n';
  if (result.algebras.empty()) {
    out << "no completion: " << result.explanation << '\n';
    return kFail;
  }
  if (!count_only) {
    for (std::size_t i = 0; i < result.algebras.size(); ++i) {
      out << "# completion " << i << '\n' << emit_mla(result.algebras[i]);
    }
  }
  return kPass;
}

// ext-check <rlce>
int cmd_ext_check(const std::string& path, std::ostream& out) {
  const RelativeExtension e = load_rlce(path);
  out << "L order: " << e.L->order() << ", G order: " << e.G->order() << '\n';
  return status(print_report(out, "extension", verify_rlce(e)));
}

// ext-invariants <rlce>
int cmd_ext_invariants(const std::string& path, std::ostream& out) {
  const RelativeExtension e = load_rlce(path);
  if (!print_report(out, "extension", verify_rlce(e))) return kFail;
  out << "kernel: " << format_set(*e.L, kernel(e.tau)) << '\n';
  out << "g-lie commutator: " << format_set(*e.L, g_commutator(e)) << '\n';
  out << "g-lie center: " << format_set(*e.L, g_center(e)) << '\n';
  out << "kernel checks:\n";
  return status(print_checks(out, kernel_checks(e)));
}

// isoclinic <rlce> <rlce>
int cmd_isoclinic(const std::string& p1, const std::string& p2, std::ostream& out) {
  const RelativeExtension e1 = load_rlce(p1);
  const RelativeExtension e2 = load_rlce(p2);
  bool ok = print_report(out, "first extension", verify_rlce(e1));
  ok = print_report(out, "second extension", verify_rlce(e2)) && ok;
  if (!ok) return kFail;
  const auto w = find_isoclinism(e1, e2);
  if (!w) {
    out << "isoclinic: no\n";
    return kFail;
  }
  out << "isoclinic: yes\n";
  out << "theta: " << format_map(*e1.G, *e2.G, w->theta.map) << '\n';
  out << "beta: " << format_map(*e1.L, *e2.L, w->beta) << '\n';
  ok = print_report(out, "witness", verify_isoclinism(e1, e2, *w));
  out << "consequences:\n";
  ok = print_checks(out, lemma_suite(e1, e2, *w)) && ok;
  out << "equivalent forms:\n";
  ok = print_checks(out, equivalence_probe(e1, e2, *w)) && ok;
  return status(ok);
}

// cover-check <rlce> --ideal i,... --cert <mla>
int cmd_cover_check(const std::string& path, const std::vector<std::string>& ideal,
                    const std::string& cert_path, std::ostream& out) {
  const RelativeExtension e = load_rlce(path);
  const MlaPtr cert = load_mla(cert_path);
  ElemSet i(e.L->order());
  for (const auto& s : ideal) i.insert(parse_elem(s, e.L->order(), "--ideal"));
  i.insert(0);
  if (!print_report(out, "extension", verify_rlce(e))) return kFail;
  out << "ideal: " << format_set(*e.L, i) << '\n';
  out << "covering pair:\n";
  bool ok = print_checks(out, covering_pair_check(e, i, *cert));
  const Check perfect = perfect_cover_check(e);
  out << "perfect cover:\n";
  ok = print_checks(out, CheckList{{perfect}}) && ok;
  return status(ok);
}

// catalog --max-order n --out dir
int cmd_catalog(std::size_t max_order, const std::string& dir, std::ostream& out) {
  const auto entries = build_catalog(max_order, Limits::from_env());
  std::filesystem::create_directories(dir);
  std::string index;
  for (const auto& e : entries) {
    write_file(std::filesystem::path(dir) / (e.file_stem + ".mla"), emit_mla(e.algebra));
    index += catalog_index_line(e) + '\n';
  }
  write_file(std::filesystem::path(dir) / "index.txt", index);
  out << index << "entries: " << entries.size() << '\n';
  return kPass;
}

// fixtures --out dir
int cmd_fixtures(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto& f : fixtures::canonical_files()) {
    write_file(std::filesystem::path(dir) / f.path, f.contents);
    out << f.path << '\n';
  }
  return kPass;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite multiplicative Lie algebras: verification, structure, extensions, isoclinism",
               "mla"};
  app.require_subcommand(1);
  std::string file, file2, cert, dir;
  std::vector<std::string> constraints, ideal;
  bool count_only = false;
  std::size_t max_order = 8;

  auto* check = app.add_subcommand("check", "Verify the group table and the Lie product identities");
  check->add_option("file", file, "mla file")->required();
  auto* report = app.add_subcommand("report", "Centers, commutators, series, Frattini subalgebra, structure checks");
  report->add_option("file", file, "mla file")->required();
  auto* subs = app.add_subcommand("subalgebras", "List all subalgebras");
  subs->add_option("file", file, "mla file")->required();
  auto* enumerate = app.add_subcommand("enumerate", "All Lie products on a group, optionally constrained");
  enumerate->add_option("--group", file, "mla file supplying the group table")->required();
  enumerate->add_option("--constraint", constraints, "i,j,k meaning i * j = k")->allow_extra_args(false);
  enumerate->add_flag("--count", count_only, "print only the number of completions");
  auto* ext_check = app.add_subcommand("ext-check", "Verify a relative Lie central extension");
  ext_check->add_option("file", file, "rlce file")->required();
  auto* ext_inv = app.add_subcommand("ext-invariants", "G-Lie commutator, G-Lie center and kernel checks");
  ext_inv->add_option("file", file, "rlce file")->required();
  auto* iso = app.add_subcommand("isoclinic", "Search for an isoclinism and check its consequences");
  iso->add_option("first", file, "rlce file")->required();
  iso->add_option("second", file2, "rlce file")->required();
  auto* cover = app.add_subcommand("cover-check", "Check covering-pair conditions against a certificate");
  cover->add_option("file", file, "rlce file")->required();
  cover->add_option("--ideal", ideal, "indices of the ideal I in L")->delimiter(',')->required();
  cover->add_option("--cert", cert, "mla file of the expected multiplier")->required();
  auto* catalog = app.add_subcommand("catalog", "Write all Lie products on the built-in groups");
  catalog->add_option("--max-order", max_order, "largest group order")->required();
  catalog->add_option("--out", dir, "output directory")->required();
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Regenerate the canonical fixture files");
  fixtures_cmd->add_option("--out", dir, "output directory")->required();
  fixtures_cmd->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kPass;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kError;
  }

  try {
    if (check->parsed()) return cmd_check(file, out);
    if (report->parsed()) return cmd_report(file, out);
    if (subs->parsed()) return cmd_subalgebras(file, out);
    if (enumerate->parsed()) return cmd_enumerate(file, constraints, count_only, out);
    if (ext_check->parsed()) return cmd_ext_check(file, out);
    if (ext_inv->parsed()) return cmd_ext_invariants(file, out);
    if (iso->parsed()) return cmd_isoclinic(file, file2, out);
    if (cover->parsed()) return cmd_cover_check(file, ideal, cert, out);
    if (catalog->parsed()) return cmd_catalog(max_order, dir, out);
    if (fixtures_cmd->parsed()) return cmd_fixtures(dir, out);
  } catch (const std::invalid_argument& e) {  // usage, structural and precondition errors
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  err << app.help();
  return kError;
}

}  // namespace mla
