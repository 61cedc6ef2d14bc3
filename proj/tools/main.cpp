// zeta3: build quotient complexes and check their zeta data from the shell.
//
// Exit codes: 0 ok, 1 checked property false, 2 construction error,
// 3 I/O or parse error, 4 internal inconsistency.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "report.hpp"
#include "zeta3/charpoly.hpp"
#include "zeta3/complex_file.hpp"
#include "zeta3/construct.hpp"
#include "zeta3/determinant.hpp"
#include "zeta3/error.hpp"
#include "zeta3/operators.hpp"
#include "zeta3/plane.hpp"
#include "zeta3/presentation.hpp"
#include "zeta3/spectra.hpp"
#include "zeta3/version.hpp"
#include "zeta3/zeta.hpp"

namespace {

using namespace zeta3;
using cli::Json;

enum Exit : int { kOk = 0, kFalse = 1, kConstruction = 2, kIo = 3, kInternal = 4 };

struct Input {
  std::string digest;
  ComplexDescription cx;
};

Input load(const std::string& path) {
  const std::string text = read_text_file(path);
  return {cli::sha256_hex(text), parse_complex(text)};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::string header(const std::string& digest) {
  return "zeta3 " + std::string(kVersion) + "  input sha256 " + digest + "\n";
}

OperatorRule parse_rule(const std::string& s) {
  if (s == "auto") return OperatorRule::Automatic;
  if (s == "presented") return OperatorRule::Presented;
  if (s == "geometric") return OperatorRule::Geometric;
  throw ParseError("unknown operator rule '" + s + "'", 0);
}

// --- gen ------------------------------------------------------------------

struct GenArgs {
  int q = 2;
  bool lex_first = false;
  bool allow_torsion = false;
  int cover_modulus = 2;
  int min_covers = -1;
  bool geometric = false;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const IncidenceStructure plane = projective_plane(a.q);
  PresentationSearchOptions opts;
  opts.allow_torsion = a.allow_torsion;
  const std::size_t n_triples = plane.size() * static_cast<std::size_t>(a.q + 1);
  if (!opts.allow_torsion && n_triples % 3 != 0) {
    opts.allow_torsion = true;
    std::cerr << "note: |T| = " << n_triples << " is not divisible by 3, so no torsion-free presentation exists;"
              << " allowing triples (x,x,x)\n";
  }
  const int min_covers = a.min_covers >= 0 ? a.min_covers : (a.q == 2 && !a.lex_first ? 4 : 0);
  if (min_covers > 0 && !a.lex_first) {
    opts.cover_requirement = CoverRequirement{a.cover_modulus, static_cast<std::size_t>(min_covers)};
  }
  const TrianglePresentation t = find_triangle_presentation(plane, opts);
  const ComplexDescription base = base_quotient(t);
  const ComplexCounts c = counts(base);
  std::cerr << "q " << a.q << "  |T| " << t.triples.size() << "  counts (" << c.n0 << ", " << c.n1 << ", "
            << c.n2 << ", " << c.chi << ")" << (is_torsion_free(t) ? "" : "  with torsion") << "\n";
  emit(serialize_complex(base, a.geometric ? FileMode::Geometric : FileMode::Presented), a.out);
  return kOk;
}

// --- cover / voltages -------------------------------------------------------

const TrianglePresentation& presentation_of(const ComplexDescription& cx) {
  if (!cx.origin) throw ConstructionError("covers need a presented complex; this file is geometric");
  return cx.origin->presentation;
}

struct CoverArgs {
  std::string path;
  int m = 1;
  std::size_t index = 0;
  bool geometric = false;
  std::string out;
};

int cmd_cover(const CoverArgs& a) {
  const Input in = load(a.path);
  const TrianglePresentation& t = presentation_of(in.cx);
  const auto solutions = solve_voltages(t, a.m);
  if (a.index >= solutions.size()) {
    throw ConstructionError("voltage index " + std::to_string(a.index) + " out of range: there are " +
                            std::to_string(solutions.size()) + " assignments mod " + std::to_string(a.m));
  }
  const ComplexDescription cover = abelian_cover(t, solutions[a.index]);
  const ComplexCounts c = counts(cover);
  std::cerr << "cover mod " << a.m << " #" << a.index << "  counts (" << c.n0 << ", " << c.n1 << ", " << c.n2
            << ", " << c.chi << ")\n";
  emit(serialize_complex(cover, a.geometric ? FileMode::Geometric : FileMode::Presented), a.out);
  return kOk;
}

struct VoltagesArgs {
  std::string path;
  int m = 2;
  bool json = false;
};

int cmd_voltages(const VoltagesArgs& a) {
  const Input in = load(a.path);
  const auto solutions = solve_voltages(presentation_of(in.cx), a.m);
  Json j = cli::envelope("voltages", in.digest);
  j["modulus"] = a.m;
  Json rows = Json::array();
  std::ostringstream text;
  text << header(in.digest) << "assignments mod " << a.m << ": " << solutions.size() << "\n";
  text << std::left << std::setw(7) << "index" << std::setw(11) << "connected" << std::setw(7) << "order"
       << "labels\n";
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const auto& v = solutions[i];
    const std::size_t order = generated_subgroup_order(v);
    const bool connected = order == static_cast<std::size_t>(3 * a.m);
    rows.push_back({{"index", i}, {"labels", v.labels}, {"subgroup_order", order}, {"connected", connected}});
    text << std::setw(7) << i << std::setw(11) << (connected ? "yes" : "no") << std::setw(7) << order;
    for (std::size_t k = 0; k < v.labels.size(); ++k) text << (k ? " " : "") << v.labels[k];
    text << "\n";
  }
  j["assignments"] = rows;
  std::cout << (a.json ? cli::dump(j) : text.str());
  return kOk;
}

// --- validate ---------------------------------------------------------------

struct PathArgs {
  std::string path;
  bool json = false;
};

int cmd_validate(const PathArgs& a) {
  const Input in = load(a.path);
  const ValidationReport r = validate(in.cx);
  if (a.json) {
    Json j = cli::envelope("validate", in.digest);
    j["report"] = cli::to_json(r);
    if (r.valid()) j["counts"] = cli::to_json(counts(in.cx));
    std::cout << cli::dump(j);
  } else {
    std::cout << header(in.digest);
    if (r.valid()) {
      const ComplexCounts c = counts(in.cx);
      std::cout << "valid  N0 " << c.n0 << "  N1 " << c.n1 << "  N2 " << c.n2 << "  chi " << c.chi << "\n";
    } else {
      std::cout << r.violations.size() << " violation(s)\n";
      for (const auto& v : r.violations) {
        std::cout << "  " << std::left << std::setw(20) << v.rule << std::setw(14) << v.subject << v.detail << "\n";
      }
    }
  }
  return r.valid() ? kOk : kFalse;
}

// --- verify -----------------------------------------------------------------

struct Perturbation {
  OperatorKind op = OperatorKind::A1;
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t delta = 0;
};

Perturbation parse_perturbation(const std::string& s) {
  std::vector<std::string> f;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ':');) f.push_back(part);
  if (f.size() != 4) throw ParseError("--perturb expects OP:ROW:COL:DELTA, got '" + s + "'", 0);
  const auto op = parse_operator(f[0]);
  if (!op) throw ParseError("unknown operator '" + f[0] + "'", 0);
  try {
    std::size_t used = 0;
    Perturbation p{*op, std::stoul(f[1], &used), 0, 0};
    if (used != f[1].size()) throw std::invalid_argument(f[1]);
    p.col = std::stoul(f[2], &used);
    if (used != f[2].size()) throw std::invalid_argument(f[2]);
    p.delta = std::stoll(f[3], &used);
    if (used != f[3].size()) throw std::invalid_argument(f[3]);
    return p;
  } catch (const std::logic_error&) {
    throw ParseError("--perturb expects OP:ROW:COL:DELTA, got '" + s + "'", 0);
  }
}

SparseIntegerMatrix& select(OperatorSet& ops, OperatorKind op) {
  switch (op) {
    case OperatorKind::A1: return ops.a1;
    case OperatorKind::A2: return ops.a2;
    case OperatorKind::LE: return ops.le;
    case OperatorKind::LB: return ops.lb;
  }
  throw InternalError("bad operator kind");
}

struct VerifyArgs {
  std::string path;
  bool json = false;
  std::string rule = "auto";
  std::string perturb;
};

std::string coefficient_line(const IntegerPolynomial& p) {
  std::string s;
  for (const auto& c : p.coefficients()) s += (s.empty() ? "" : " ") + c.str();
  return s;
}

int cmd_verify(const VerifyArgs& a) {
  const Input in = load(a.path);
  require_valid(in.cx);
  OperatorSet ops = build_operators(in.cx, parse_rule(a.rule));
  std::optional<Perturbation> p;
  if (!a.perturb.empty()) {
    p = parse_perturbation(a.perturb);
    SparseIntegerMatrix& m = select(ops, p->op);
    if (p->row >= m.dimension() || p->col >= m.dimension()) {
      throw ParseError("--perturb entry outside the " + std::to_string(m.dimension()) + "x" +
                           std::to_string(m.dimension()) + " matrix",
                       0);
    }
    m.add(p->row, p->col, p->delta);
  }
  const ZetaParts parts = assemble_parts(in.cx.q, counts(in.cx), ops);
  const IdentityVerdict v = verify_identity(parts);

  if (a.json) {
    Json j = cli::envelope("verify", in.digest);
    j["parts"] = cli::parts_to_json(parts);
    j["identity"] = {{"holds", v.holds}};
    if (p) j["perturbation"] = {{"op", to_string(p->op)}, {"row", p->row}, {"col", p->col}, {"delta", p->delta}};
    if (!v.holds) {
      j["identity"]["lhs"] = cli::to_json(v.lhs);
      j["identity"]["rhs"] = cli::to_json(v.rhs);
      if (v.witness) {
        j["identity"]["witness"] = {{"index", v.witness->index},
                                    {"lhs", cli::to_json(v.witness->lhs)},
                                    {"rhs", cli::to_json(v.witness->rhs)}};
      }
    }
    std::cout << cli::dump(j);
  } else {
    const ComplexCounts& c = parts.counts;
    std::cout << header(in.digest);
    std::cout << "counts   N0 " << c.n0 << "  N1 " << c.n1 << "  N2 " << c.n2 << "  chi " << c.chi << "\n";
    std::cout << "degrees  P_A " << parts.pa.degree() << "  P_E " << parts.pe.degree() << "  P_B "
              << parts.pb.degree() << "\n";
    if (p) std::cout << "perturbed " << a.perturb << "\n";
    std::cout << "(1-u^3)^chi P_E(u) P_E(u^2) = P_A(u) P_B(u): " << (v.holds ? "holds" : "FAILS") << "\n";
    if (!v.holds) {
      if (v.witness) {
        std::cout << "first difference at u^" << v.witness->index << ": lhs " << v.witness->lhs << ", rhs "
                  << v.witness->rhs << "\n";
      }
      std::cout << "lhs " << coefficient_line(v.lhs) << "\n";
      std::cout << "rhs " << coefficient_line(v.rhs) << "\n";
    }
  }
  return v.holds ? kOk : kFalse;
}

// --- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
  std::string path;
  std::string parts;
  bool json = false;
};

int cmd_spectrum(const SpectrumArgs& a) {
  ZetaParts parts;
  std::string digest;
  if (!a.parts.empty()) {
    const std::string text = read_text_file(a.parts);
    digest = cli::sha256_hex(text);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("parts file: ") + e.what(), 0);
    }
    parts = cli::parts_from_json(j.contains("parts") ? j["parts"] : j);
  } else {
    const Input in = load(a.path);
    require_valid(in.cx);
    digest = in.digest;
    parts = zeta_parts(in.cx);
  }
  const SpectralReport r = spectral_report(parts);
  if (a.json) {
    Json j = cli::envelope("spectrum", digest);
    j["q"] = parts.q;
    j["counts"] = cli::to_json(parts.counts);
    j["report"] = cli::to_json(r);
    std::cout << cli::dump(j);
  } else {
    std::cout << header(digest) << cli::spectrum_text(r);
  }
  if (!r.verdicts.agree()) {
    std::cerr << "error: the three Ramanujan criteria disagree\n";
    return kInternal;
  }
  return kOk;
}

// --- geodesics --------------------------------------------------------------

struct GeodesicArgs {
  std::string path;
  std::size_t max_len = 12;
  bool oracle = false;
  bool json = false;
  std::string rule = "auto";
};

int cmd_geodesics(const GeodesicArgs& a) {
  const Input in = load(a.path);
  require_valid(in.cx);
  const OperatorSet ops = build_operators(in.cx, parse_rule(a.rule));
  const ZetaParts parts = assemble_parts(in.cx.q, counts(in.cx), ops);
  const std::vector<Integer> n = geodesic_counts(parts, a.max_len);
  const std::size_t oracle_len = a.oracle ? std::min<std::size_t>(a.max_len, 6) : 0;
  const std::vector<Integer> traces = trace_powers(ops.le, oracle_len);
  std::vector<Integer> walks;
  for (std::size_t m = 1; m <= oracle_len; ++m) walks.push_back(walk_count_oracle(in.cx, m));

  int status = kOk;
  Json rows = Json::array();
  std::ostringstream text;
  text << header(in.digest) << std::right << std::setw(4) << "l" << std::setw(24) << "N_l";
  if (oracle_len) text << std::setw(24) << "tr(L_E^l)" << std::setw(24) << "walks" << std::setw(8) << "agree";
  text << "\n";
  for (std::size_t l = 1; l <= n.size(); ++l) {
    const Integer& nl = n[l - 1];
    if (nl < 0) status = kInternal;
    Json row = {{"length", l}, {"count", cli::to_json(nl)}};
    text << std::setw(4) << l << std::setw(24) << nl;
    if (l <= oracle_len) {
      // N_l = tr(L^l) + 2 tr(L^(l/2)), the second term for even l only.
      Integer from_walks = walks[l - 1];
      if (l % 2 == 0) from_walks += 2 * walks[l / 2 - 1];
      const bool agree = traces[l - 1] == walks[l - 1] && from_walks == nl;
      if (!agree) status = kInternal;
      row["trace"] = cli::to_json(traces[l - 1]);
      row["walks"] = cli::to_json(walks[l - 1]);
      row["agree"] = agree;
      text << std::setw(24) << traces[l - 1] << std::setw(24) << walks[l - 1] << std::setw(8)
           << (agree ? "yes" : "NO");
    }
    text << "\n";
    rows.push_back(std::move(row));
  }
  if (a.json) {
    Json j = cli::envelope("geodesics", in.digest);
    j["max_length"] = a.max_len;
    j["oracle_length"] = oracle_len;
    j["counts"] = rows;
    std::cout << cli::dump(j);
  } else {
    std::cout << text.str();
  }
  if (status != kOk) std::cerr << "error: geodesic counts are negative or disagree with the walk oracle\n";
  return status;
}

// --- matrix -----------------------------------------------------------------

struct MatrixArgs {
  std::string path;
  std::string op;
  std::string rule = "auto";
  std::string out;
};

int cmd_matrix(const MatrixArgs& a) {
  const auto op = parse_operator(a.op);
  if (!op) throw ParseError("unknown operator '" + a.op + "' (expected A1, A2, LE or LB)", 0);
  const Input in = load(a.path);
  require_valid(in.cx);
  const SparseIntegerMatrix m = build_operator(in.cx, *op, parse_rule(a.rule));
  std::string text;
  for (const auto& e : m.entries()) {
    text += std::to_string(e.row) + " " + std::to_string(e.col) + " " + std::to_string(e.value) + "\n";
  }
  std::cerr << to_string(*op) << "  " << m.dimension() << "x" << m.dimension() << "  " << m.nonzeros()
            << " nonzeros\n";
  emit(text, a.out);
  return kOk;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const ConstructionError& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return kConstruction;
  } catch (const InvalidComplex& e) {
    std::cerr << "invalid complex: " << e.what() << "\n";
    return kFalse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quotients of the PGL(3) building and their zeta functions"};
  app.set_version_flag("--version", std::string("zeta3 ") + kVersion);
  app.require_subcommand(1);
  bool self_check = false;
  app.add_flag("--self-check", self_check, "Re-check every polynomial determinant at 5 random points");

  const std::vector<std::string> rules{"auto", "presented", "geometric"};

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Build the base quotient from the first triangle presentation");
  g->add_option("--q", gen.q, "Order of the projective plane")->required();
  g->add_flag("--lex-first", gen.lex_first, "Take the lexicographically first presentation, no cover requirement");
  g->add_flag("--allow-torsion", gen.allow_torsion, "Admit triples (x,x,x)");
  g->add_option("--cover-modulus", gen.cover_modulus, "Modulus m of the required Z/3 x Z/m covers");
  g->add_option("--min-covers", gen.min_covers, "Required number of connected covers (default 4 for q = 2)");
  g->add_flag("--geometric", gen.geometric, "Write vertex/edge/chamber records");
  g->add_option("-o,--output", gen.out, "Output file (default stdout)");

  CoverArgs cover;
  auto* c = app.add_subcommand("cover", "Build an abelian cover of a presented complex");
  c->add_option("base", cover.path, "Presented complex file")->required();
  c->add_option("--m", cover.m, "Cover modulus")->required()->check(CLI::Range(1, 1000));
  c->add_option("--voltage-index", cover.index, "Position in the list printed by `voltages`");
  c->add_flag("--geometric", cover.geometric, "Write vertex/edge/chamber records");
  c->add_option("-o,--output", cover.out, "Output file (default stdout)");

  VoltagesArgs volt;
  auto* vo = app.add_subcommand("voltages", "List voltage assignments mod m");
  vo->add_option("base", volt.path, "Presented complex file")->required();
  vo->add_option("--m", volt.m, "Modulus")->required()->check(CLI::Range(1, 1000));
  vo->add_flag("--json", volt.json);

  PathArgs val;
  auto* va = app.add_subcommand("validate", "Check the complex axioms");
  va->add_option("path", val.path, "Complex file")->required();
  va->add_flag("--json", val.json);

  VerifyArgs ver;
  auto* ve = app.add_subcommand("verify", "Check (1-u^3)^chi P_E(u) P_E(u^2) = P_A(u) P_B(u)");
  ve->add_option("path", ver.path, "Complex file")->required();
  ve->add_flag("--json", ver.json);
  ve->add_option("--rule", ver.rule, "Continuation rule for L_E and L_B")->check(CLI::IsMember(rules));
  ve->add_option("--perturb", ver.perturb, "Add DELTA to one operator entry, OP:ROW:COL:DELTA");

  SpectrumArgs spectrum_args;
  auto* sp = app.add_subcommand("spectrum", "Classify zeros and compare the three Ramanujan criteria");
  auto* sp_path = sp->add_option("path", spectrum_args.path, "Complex file");
  auto* sp_parts = sp->add_option("--parts", spectrum_args.parts, "Read P_A, P_E, P_B from a JSON file instead");
  sp_path->excludes(sp_parts);
  sp->add_flag("--json", spectrum_args.json);

  GeodesicArgs geo;
  auto* ge = app.add_subcommand("geodesics", "Tabulate geodesic counts N_l");
  ge->add_option("path", geo.path, "Complex file")->required();
  ge->add_option("--max-len", geo.max_len, "Largest length l")->required()->check(CLI::Range(0, 200));
  ge->add_flag("--oracle", geo.oracle, "Recount traces by walk enumeration for l <= 6");
  ge->add_flag("--json", geo.json);
  ge->add_option("--rule", geo.rule, "Continuation rule for L_E")->check(CLI::IsMember(rules));

  MatrixArgs mat;
  auto* ma = app.add_subcommand("matrix", "Print an operator as row col value triplets");
  ma->add_option("path", mat.path, "Complex file")->required();
  ma->add_option("--op", mat.op, "A1, A2, LE or LB")->required();
  ma->add_option("--rule", mat.rule, "Continuation rule for L_E and L_B")->check(CLI::IsMember(rules));
  ma->add_option("-o,--output", mat.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIo;
  }
  if (self_check) set_self_check_default(true);

  if (*g) return guarded([&] { return cmd_gen(gen); });
  if (*c) return guarded([&] { return cmd_cover(cover); });
  if (*vo) return guarded([&] { return cmd_voltages(volt); });
  if (*va) return guarded([&] { return cmd_validate(val); });
  if (*ve) return guarded([&] { return cmd_verify(ver); });
  if (*sp) {
    if (spectrum_args.path.empty() && spectrum_args.parts.empty()) {
      std::cerr << "spectrum: give a complex file or --parts\n";
      return kIo;
    }
    return guarded([&] { return cmd_spectrum(spectrum_args); });
  }
  if (*ge) return guarded([&] { return cmd_geodesics(geo); });
  if (*ma) return guarded([&] { return cmd_matrix(mat); });
  return kInternal;
}
