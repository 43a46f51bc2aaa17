// Command-line front end: builds the octonionic magic-square Lie algebras,
// prints octonion tables and triality identities, evaluates single brackets,
// verifies structure-constant tables and exports them in canonical formats.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octlie/albert.hpp"
#include "octlie/e8.hpp"
#include "octlie/engine.hpp"
#include "octlie/f4.hpp"
#include "octlie/so16.hpp"
#include "octlie/so8.hpp"
#include "octlie/so9.hpp"
#include "octlie/table_io.hpp"
#include "octlie/verify.hpp"

namespace {

using namespace octlie;

std::string signed_unit_text(SignedUnit u, int alphabet) {
  return (u.sign < 0 ? "-" : "") + unit_name(u.unit, alphabet);
}

int cmd_table(const std::string& kind_s, const std::string& format) {
  AlgebraKind kind = kind_from_name(kind_s);
  const MultiplicationTable& t = MultiplicationTable::get(kind);
  if (format == "text" || format == "both") {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        std::cout << (b ? "\t" : "") << signed_unit_text(t.product(a, b), 0);
      }
      std::cout << "\n";
    }
  }
  if (format == "json" || format == "both") {
    std::string out = "{\"format_version\":1,\"kind\":\"" + std::string(kind_name(kind)) +
                      "\",\"units\":[";
    for (int u = 0; u < 8; ++u) {
      if (u) out += ",";
      out += "\"" + unit_name(u, 0) + "\"";
    }
    out += "],\"products\":[";
    for (int a = 0; a < 8; ++a) {
      if (a) out += ",";
      out += "[";
      for (int b = 0; b < 8; ++b) {
        if (b) out += ",";
        SignedUnit p = t.product(a, b);
        out += "[" + std::to_string(p.sign) + "," + std::to_string(p.unit) + "]";
      }
      out += "]";
    }
    out += "]}";
    std::cout << out << "\n";
  }
  return 0;
}

std::string expansion_text(const So8& so8, char target, const std::vector<Rational>& coords,
                           int alphabet) {
  std::string rhs;
  for (int i = 0; i < So8::dim; ++i) {
    if (coords[i].is_zero()) continue;
    if (!rhs.empty()) rhs += " + ";
    rhs += coords[i].to_string() + "*" + target + ":" + so8.label_name(i, alphabet);
  }
  return rhs.empty() ? "0" : rhs;
}

int cmd_triality(const std::string& kind_s) {
  AlgebraKind kind = kind_from_name(kind_s);
  const So8& so8 = So8::get(kind);
  const int alphabet = 0;
  for (int i = 0; i < So8::dim; ++i) {
    auto e = triality_expand(kind, 'L', so8.labels()[i], 'R');
    std::cout << "L:" << so8.label_name(i, alphabet) << " = "
              << expansion_text(so8, 'R', e.coords, alphabet) << "\n";
  }
  for (int i = 0; i < So8::dim; ++i) {
    auto e = triality_expand(kind, 'R', so8.labels()[i], 'L');
    std::cout << "R:" << so8.label_name(i, alphabet) << " = "
              << expansion_text(so8, 'L', e.coords, alphabet) << "\n";
  }
  return 0;
}

StructureConstants build_algebra(const std::string& algebra, const std::string& k_s,
                                 const std::string& l_s) {
  AlgebraKind kk = kind_from_name(k_s);
  if (algebra == "so8") return so8_structure_table(kk);
  if (algebra == "so9") return Engine(AlgebraId::so9, kk, std::nullopt).build_table();
  if (algebra == "f4") return Engine(AlgebraId::f4, kk, std::nullopt).build_table();
  if (algebra == "so16" || algebra == "e8") {
    if (l_s.empty()) throw CLI::ValidationError("--l is required for " + algebra);
    AlgebraKind lk = kind_from_name(l_s);
    return Engine(algebra == "so16" ? AlgebraId::so16 : AlgebraId::e8, kk, lk).build_table();
  }
  throw CLI::ValidationError("unknown algebra '" + algebra + "'");
}

std::string albert_rep_json(AlgebraKind kind) {
  F4Algebra f4(kind);
  std::string out = "{\"format_version\":1,\"type\":\"albert_action\",\"algebra\":\"f4\"";
  out += ",\"k_kind\":\"" + std::string(kind_name(kind)) + "\",\"dim\":26,\"basis\":[";
  for (int b = 0; b < F4Algebra::dim; ++b) {
    if (b) out += ",";
    out += "\"" + label_name(f4.engine().labels()[b], false) + "\"";
  }
  out += "],\"space\":[\"U0\",\"V0\"";
  for (const char* fam : {"U", "V", "W"}) {
    for (int u = 0; u < 8; ++u) out += std::string(",\"") + fam + ":" + unit_name(u, 0) + "\"";
  }
  out += "],\"matrices\":[";
  for (int b = 0; b < F4Algebra::dim; ++b) {
    if (b) out += ",";
    out += "[";
    const RatMatrix& m = f4.albert_matrix26(b);
    bool first = true;
    for (int r = 0; r < 26; ++r) {
      for (int c = 0; c < 26; ++c) {
        if (m.at(r, c).is_zero()) continue;
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(r) + "," + std::to_string(c) + "," +
               std::to_string(m.at(r, c).num_int64()) + "," +
               std::to_string(m.at(r, c).den_int64()) + "]";
      }
    }
    out += "]";
  }
  out += "]}\n";
  return out;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

// Parses a basis label, accepting E:/F: aliases in the 3×3 algebras, into a
// coordinate vector of the engine's algebra.
std::vector<Rational> element_from_label(const Engine& eng, const std::string& s) {
  std::vector<Rational> coords(eng.dim());
  const bool two = eng.dl() > 1;
  if (s.rfind("E:", 0) == 0 || s.rfind("F:", 0) == 0) {
    const char lang = s[0];
    BasisLabel as_d = label_parse("D" + s.substr(1), two);
    const int factor = as_d.family == BasisLabel::Family::DL ? 1 : 0;
    const So8& so8 =
        So8::get(factor == 0 ? eng.k_kind() : *eng.l_kind());
    return eng.ef_alias_coords(lang, factor, so8.index_of({as_d.p, as_d.q}));
  }
  coords[eng.index_of(label_parse(s, two))] = 1;
  return coords;
}

int cmd_bracket(const std::string& algebra, const std::string& k_s, const std::string& l_s,
                const std::string& xs, const std::string& ys) {
  AlgebraKind kk = kind_from_name(k_s);
  if (algebra == "so8") {
    const So8& so8 = So8::get(kk);
    BasisLabel x = label_parse(xs, false);
    BasisLabel y = label_parse(ys, false);
    auto coords = so8.bracket(so8.index_of({x.p, x.q}), so8.index_of({y.p, y.q}));
    bool any = false;
    for (int i = 0; i < So8::dim; ++i) {
      if (coords[i].is_zero()) continue;
      std::cout << coords[i].to_string() << " L:" << so8.label_name(i, 0) << "\n";
      any = true;
    }
    if (!any) std::cout << "0\n";
    return 0;
  }
  std::optional<AlgebraKind> lk;
  if (!l_s.empty()) lk = kind_from_name(l_s);
  Engine eng(algebra_from_name(algebra), kk, lk);
  auto out = eng.bracket(element_from_label(eng, xs), element_from_label(eng, ys));
  bool any = false;
  for (int i = 0; i < eng.dim(); ++i) {
    if (out[i].is_zero()) continue;
    std::cout << out[i].to_string() << " " << label_name(eng.labels()[i], eng.dl() > 1) << "\n";
    any = true;
  }
  if (!any) std::cout << "0\n";
  return 0;
}

int cmd_verify(const std::string& in_path, const std::string& checks_csv, bool triples,
               int samples, std::uint64_t seed) {
  StructureConstants t = table_from_json(read_file(in_path));
  std::vector<std::string> names;
  std::string cur;
  for (char c : checks_csv + ",") {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  VerificationReport rep = run_checks(t, names, triples, samples, seed);
  std::cout << rep.to_text();
  return rep.all_pass() ? 0 : 1;
}

int cmd_killing(const std::string& in_path) {
  StructureConstants t = table_from_json(read_file(in_path));
  KillingResult kr = killing(t);
  std::cout << "algebra=" << t.algebra() << " inertia=(" << kr.in.n_plus << "," << kr.in.n_minus
            << "," << kr.in.n_zero << ") signature=" << (kr.in.n_plus - kr.in.n_minus)
            << " form=" << kr.form_name << "\n";
  return kr.nondegenerate ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octlie: exact octonionic constructions of the magic-square Lie algebras"};
  app.require_subcommand(1);

  std::string kind = "compact", format = "both";
  auto* table_cmd = app.add_subcommand("table", "print the octonion multiplication table");
  table_cmd->add_option("--kind", kind, "compact or split")->required();
  table_cmd->add_option("--format", format, "text, json or both");

  std::string tri_kind = "compact";
  auto* tri_cmd = app.add_subcommand("triality", "print the L<->R operator conversion identities");
  tri_cmd->add_option("--kind", tri_kind, "compact or split")->required();

  std::string algebra, k_s, l_s, out_path, rep;
  auto* build_cmd = app.add_subcommand("build", "build an algebra and export its table");
  build_cmd->add_option("--algebra", algebra, "so8, so9, so16, f4 or e8")->required();
  build_cmd->add_option("--k", k_s, "kind of the first octonion factor")->required();
  build_cmd->add_option("--l", l_s, "kind of the second factor (so16, e8)");
  build_cmd->add_option("--out", out_path, "output path (stdout when absent)");
  build_cmd->add_option("--rep", rep, "'albert' (f4 only): emit the 26-dim action matrices");

  std::string br_algebra, br_k, br_l, br_x, br_y;
  auto* br_cmd = app.add_subcommand("bracket", "print one bracket of basis elements");
  br_cmd->add_option("--algebra", br_algebra)->required();
  br_cmd->add_option("--k", br_k)->required();
  br_cmd->add_option("--l", br_l);
  br_cmd->add_option("--x", br_x, "label, e.g. Y:i or D:k:i,il (E:/F: aliases allowed)")->required();
  br_cmd->add_option("--y", br_y)->required();

  std::string v_in, v_checks = "antisym,jacobi,killing,invariance,rank";
  bool v_triples = false;
  int v_samples = 5;
  std::uint64_t v_seed = 1;
  auto* v_cmd = app.add_subcommand("verify", "verify a structure-constant table");
  v_cmd->add_option("--in", v_in)->required();
  v_cmd->add_option("--checks", v_checks, "comma list: antisym,jacobi,killing,invariance,rank");
  v_cmd->add_flag("--triples", v_triples, "also run the explicit Jacobi triple loop");
  v_cmd->add_option("--samples", v_samples, "rank probe samples");
  v_cmd->add_option("--seed", v_seed, "rank probe seed");

  std::string k_in;
  auto* k_cmd = app.add_subcommand("killing", "Killing form inertia and real-form name");
  k_cmd->add_option("--in", k_in)->required();

  std::string e_in, e_format = "json", e_out;
  auto* e_cmd = app.add_subcommand("export", "re-export a table as canonical JSON or CSV");
  e_cmd->add_option("--in", e_in)->required();
  e_cmd->add_option("--format", e_format, "json or csv");
  e_cmd->add_option("--out", e_out, "output path (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed()) return cmd_table(kind, format);
    if (tri_cmd->parsed()) return cmd_triality(tri_kind);
    if (build_cmd->parsed()) {
      if (!rep.empty()) {
        if (rep != "albert" || algebra != "f4") {
          std::cerr << "--rep albert is available for --algebra f4 only\n";
          return 2;
        }
        emit(albert_rep_json(kind_from_name(k_s)), out_path);
        return 0;
      }
      emit(table_to_json(build_algebra(algebra, k_s, l_s)), out_path);
      return 0;
    }
    if (br_cmd->parsed()) return cmd_bracket(br_algebra, br_k, br_l, br_x, br_y);
    if (v_cmd->parsed()) return cmd_verify(v_in, v_checks, v_triples, v_samples, v_seed);
    if (k_cmd->parsed()) return cmd_killing(k_in);
    if (e_cmd->parsed()) {
      StructureConstants t = table_from_json(read_file(e_in));
      emit(e_format == "csv" ? table_to_csv(t) : table_to_json(t), e_out);
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
