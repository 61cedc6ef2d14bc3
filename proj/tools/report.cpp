#include "report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "zeta3/error.hpp"
#include "zeta3/version.hpp"

namespace zeta3::cli {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

double fixed(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0 ? 0.0 : r;
}

Json to_json(const Integer& x) { return x.str(); }

Json to_json(const IntegerPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

Json to_json(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

Json to_json(const ComplexCounts& c) {
  return {{"n0", c.n0}, {"n1", c.n1}, {"n2", c.n2}, {"chi", c.chi}};
}

Json to_json(const Classification& c) {
  Json buckets = Json::array();
  for (const auto& b : c.buckets) {
    buckets.push_back({{"class", b.modulus_class.label},
                       {"exponent", fixed(b.modulus_class.exponent)},
                       {"modulus", fixed(b.modulus)},
                       {"trivial", b.modulus_class.trivial},
                       {"ramanujan", b.modulus_class.ramanujan},
                       {"count", b.count}});
  }
  Json residue = Json::array();
  for (const auto& z : c.unclassified) {
    residue.push_back({{"re", fixed(z.real())}, {"im", fixed(z.imag())}, {"modulus", fixed(std::abs(z))}});
  }
  return {{"operator", to_string(c.op)},
          {"degree", c.degree},
          {"trivial_removed_exactly", c.trivial_removed_exactly},
          {"buckets", buckets},
          {"unclassified", residue},
          {"nontrivial_count", c.nontrivial_count()},
          {"ramanujan", c.ramanujan()},
          {"tolerance", c.tolerance}};
}

Json to_json(const SpectralReport& r) {
  Json j;
  j["operators"] = {{"A", to_json(r.a)}, {"E", to_json(r.e)}, {"B", to_json(r.b)}};
  j["verdicts"] = {{"hecke", r.verdicts.hecke},
                   {"edge", r.verdicts.edge},
                   {"chamber", r.verdicts.chamber},
                   {"agree", r.verdicts.agree()},
                   {"ramanujan", r.verdicts.ramanujan()}};
  j["steinberg"] = {{"chi", r.steinberg.chi}, {"divides", r.steinberg.divides}, {"order", r.steinberg.order}};
  j["census"] = {{"a", r.census.a},
                 {"b", r.census.b},
                 {"c", r.census.c},
                 {"d", r.census.d},
                 {"e", r.census.e},
                 {"consistent", r.census.consistent},
                 {"diagnostics", r.census.diagnostics}};
  j["rank"] = {{"pe_full_rank", r.rank.pe_full_rank},
               {"pb_full_rank", r.rank.pb_full_rank},
               {"constants_one", r.rank.constants_one}};
  j["q34_zeros"] = r.q34_zeros;
  j["notes"] = r.notes;
  j["tolerances"] = {{"classification", kClassificationTolerance}, {"root_accuracy", kRootAccuracy}};
  return j;
}

Json to_json(const ValidationReport& r) {
  Json a = Json::array();
  for (const auto& v : r.violations) {
    a.push_back({{"kind", v.kind == ViolationKind::Structural ? "structural" : "axiom"},
                 {"rule", v.rule},
                 {"subject", v.subject},
                 {"detail", v.detail}});
  }
  return {{"valid", r.valid()}, {"violations", a}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError("not an integer: '" + s + "'", 0);
    }
    return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump(), 0);
}

IntegerPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array", 0);
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntegerPolynomial(std::move(c));
}

Json parts_to_json(const ZetaParts& p) {
  return {{"q", p.q}, {"counts", to_json(p.counts)}, {"pa", to_json(p.pa)}, {"pe", to_json(p.pe)}, {"pb", to_json(p.pb)}};
}

ZetaParts parts_from_json(const Json& j) {
  try {
    ZetaParts p;
    p.q = j.at("q").get<int>();
    const auto& c = j.at("counts");
    p.counts.n0 = c.at("n0").get<std::int64_t>();
    p.counts.n1 = c.at("n1").get<std::int64_t>();
    p.counts.n2 = c.at("n2").get<std::int64_t>();
    p.counts.chi = p.counts.n0 - p.counts.n1 + p.counts.n2;
    if (c.contains("chi") && c["chi"].get<std::int64_t>() != p.counts.chi) {
      throw ParseError("counts.chi disagrees with n0 - n1 + n2", 0);
    }
    p.pa = polynomial_from_json(j.at("pa"));
    p.pe = polynomial_from_json(j.at("pe"));
    p.pb = polynomial_from_json(j.at("pb"));
    if (p.q < 2) throw ParseError("q must be at least 2", 0);
    for (const auto* poly : {&p.pa, &p.pe, &p.pb}) {
      if (poly->coefficient(0) != 1) throw ParseError("parts polynomials must have constant term 1", 0);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parts file: ") + e.what(), 0);
  }
}

Json envelope(const std::string& command, const std::string& input_digest) {
  Json j;
  j["tool"] = {{"name", "zeta3"}, {"version", kVersion}};
  j["command"] = command;
  if (!input_digest.empty()) j["input_sha256"] = input_digest;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string spectrum_text(const SpectralReport& r) {
  std::ostringstream out;
  out << std::left;
  for (const auto* c : {&r.a, &r.e, &r.b}) {
    out << "P_" << to_string(c->op) << "  degree " << c->degree
        << (c->trivial_removed_exactly ? "  (trivial factor removed exactly)" : "") << "\n";
    for (const auto& b : c->buckets) {
      if (b.count == 0) continue;
      out << "  " << std::setw(9) << b.modulus_class.label << std::setw(12)
          << (b.modulus_class.trivial ? "trivial" : (b.modulus_class.ramanujan ? "nontrivial" : "non-Ram."))
          << std::right << std::setw(6) << b.count << std::left << "\n";
    }
    if (!c->unclassified.empty()) {
      out << "  " << std::setw(21) << "unclassified" << std::right << std::setw(6) << c->unclassified.size()
          << std::left << "\n";
    }
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "verdicts  hecke " << yn(r.verdicts.hecke) << "  edge " << yn(r.verdicts.edge) << "  chamber "
      << yn(r.verdicts.chamber) << "  agree " << yn(r.verdicts.agree()) << "\n";
  out << "steinberg chi " << r.steinberg.chi << "  (1-u^3)^(chi-1) divides P_B " << yn(r.steinberg.divides)
      << "  order " << r.steinberg.order << "\n";
  out << "census    a " << r.census.a << "  b " << r.census.b << "  c " << r.census.c << "  d " << r.census.d
      << "  e " << r.census.e << "  consistent " << yn(r.census.consistent) << "\n";
  for (const auto& d : r.census.diagnostics) out << "  " << d << "\n";
  out << "rank      det L_E != 0 " << yn(r.rank.pe_full_rank) << "  det L_B != 0 " << yn(r.rank.pb_full_rank)
      << "\n";
  out << "tolerance classification " << kClassificationTolerance << "  roots " << kRootAccuracy << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace zeta3::cli
