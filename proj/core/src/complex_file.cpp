#include "zeta3/complex_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "zeta3/construct.hpp"
#include "zeta3/error.hpp"

namespace zeta3 {

namespace {

constexpr std::string_view kHeader = "zeta3-complex v1";

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  return value;
}

int parse_small(std::string_view token, std::size_t line) {
  const std::int64_t v = parse_int(token, line);
  if (v < -1'000'000 || v > 1'000'000) throw ParseError("value " + std::string(token) + " out of range", line);
  return static_cast<int>(v);
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n, std::size_t line) {
  if (tokens.size() != n) {
    throw ParseError("'" + std::string(tokens[0]) + "' takes " + std::to_string(n - 1) + " fields, got " +
                         std::to_string(tokens.size() - 1),
                     line);
  }
}

}  // namespace

std::string serialize_complex(const ComplexDescription& cx, FileMode mode) {
  const bool presented = mode == FileMode::Presented || (mode == FileMode::Automatic && cx.presented());
  if (presented && !cx.presented()) throw Error("serialize_complex: complex has no presentation");
  std::ostringstream os;
  os << kHeader << "\n";
  os << "q " << cx.q << "\n";
  if (presented) {
    const auto& t = cx.origin->presentation;
    const auto& v = cx.origin->voltage;
    os << "mode presented\n";
    for (std::size_t x = 0; x < t.lambda.size(); ++x) os << "lambda " << x << ":" << t.lambda[x] << "\n";
    for (const auto& [x, y, z] : t.triples) os << "triple " << x << " " << y << " " << z << "\n";
    os << "voltage " << v.modulus;
    for (int c : v.labels) os << " " << c;
    os << "\n";
  } else {
    os << "mode geometric\n";
    for (const auto& v : cx.vertices) os << "vertex " << v.id << " " << v.type << "\n";
    for (const auto& e : cx.edges) os << "edge " << e.id << " " << e.tail << " " << e.head << "\n";
    for (const auto& c : cx.chambers) {
      os << "chamber " << c.edges[0] << " " << c.edges[1] << " " << c.edges[2] << "\n";
    }
  }
  return os.str();
}

ComplexDescription parse_complex(std::string_view text) {
  if (!text.empty() && text.back() != '\n') throw ParseError("file does not end with a newline (truncated?)", 0);

  std::optional<int> q;
  std::optional<std::string> mode;
  std::map<int, int> lambda;
  std::vector<Triple> triples;
  std::optional<VoltageAssignment> voltage;
  ComplexDescription geo;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!header) {
      if (line != kHeader) throw ParseError("expected header '" + std::string(kHeader) + "'", line_no);
      header = true;
      continue;
    }
    const std::string_view key = tokens[0];
    auto need_mode = [&](const char* m) {
      if (!mode) throw ParseError("'" + std::string(key) + "' before the mode line", line_no);
      if (*mode != m) throw ParseError("'" + std::string(key) + "' is not allowed in " + *mode + " mode", line_no);
    };
    if (key == "q") {
      expect_arity(tokens, 2, line_no);
      if (q) throw ParseError("duplicate q line", line_no);
      q = parse_small(tokens[1], line_no);
    } else if (key == "mode") {
      expect_arity(tokens, 2, line_no);
      if (mode) throw ParseError("duplicate mode line", line_no);
      if (tokens[1] != "presented" && tokens[1] != "geometric") {
        throw ParseError("unknown mode '" + std::string(tokens[1]) + "'", line_no);
      }
      mode = std::string(tokens[1]);
    } else if (key == "lambda") {
      need_mode("presented");
      expect_arity(tokens, 2, line_no);
      const auto colon = tokens[1].find(':');
      if (colon == std::string_view::npos) throw ParseError("lambda entry must read i:j", line_no);
      const int i = parse_small(tokens[1].substr(0, colon), line_no);
      const int j = parse_small(tokens[1].substr(colon + 1), line_no);
      if (!lambda.emplace(i, j).second) throw ParseError("lambda(" + std::to_string(i) + ") given twice", line_no);
    } else if (key == "triple") {
      need_mode("presented");
      expect_arity(tokens, 4, line_no);
      triples.push_back({parse_small(tokens[1], line_no), parse_small(tokens[2], line_no), parse_small(tokens[3], line_no)});
    } else if (key == "voltage") {
      need_mode("presented");
      if (voltage) throw ParseError("duplicate voltage line", line_no);
      if (tokens.size() < 2) throw ParseError("voltage needs a modulus", line_no);
      VoltageAssignment v;
      v.modulus = parse_small(tokens[1], line_no);
      for (std::size_t k = 2; k < tokens.size(); ++k) v.labels.push_back(parse_small(tokens[k], line_no));
      voltage = std::move(v);
    } else if (key == "vertex") {
      need_mode("geometric");
      expect_arity(tokens, 3, line_no);
      geo.vertices.push_back({parse_int(tokens[1], line_no), parse_small(tokens[2], line_no)});
    } else if (key == "edge") {
      need_mode("geometric");
      expect_arity(tokens, 4, line_no);
      geo.edges.push_back({parse_int(tokens[1], line_no), parse_int(tokens[2], line_no), parse_int(tokens[3], line_no)});
    } else if (key == "chamber") {
      need_mode("geometric");
      expect_arity(tokens, 4, line_no);
      geo.chambers.push_back(
          {{parse_int(tokens[1], line_no), parse_int(tokens[2], line_no), parse_int(tokens[3], line_no)}});
    } else {
      throw ParseError("unknown record '" + std::string(key) + "'", line_no);
    }
  }

  if (!header) throw ParseError("empty file", 0);
  if (!q) throw ParseError("missing q line", 0);
  if (!mode) throw ParseError("missing mode line", 0);

  if (*mode == "geometric") {
    if (geo.vertices.empty() || geo.edges.empty() || geo.chambers.empty()) {
      throw ParseError("geometric complex lacks vertex, edge or chamber records (truncated?)", 0);
    }
    geo.q = *q;
    return canonicalize(std::move(geo));
  }

  const IncidenceStructure plane = projective_plane(*q);
  const int n = static_cast<int>(plane.size());
  if (static_cast<int>(lambda.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " lambda lines, found " + std::to_string(lambda.size()) +
                         " (truncated?)",
                     0);
  }
  TrianglePresentation t;
  t.plane = plane;
  for (int x = 0; x < n; ++x) {
    auto it = lambda.find(x);
    if (it == lambda.end()) throw ParseError("lambda(" + std::to_string(x) + ") missing", 0);
    t.lambda.push_back(it->second);
  }
  const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(*q + 1);
  if (triples.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " triple lines, found " +
                         std::to_string(triples.size()) + " (truncated?)",
                     0);
  }
  if (!voltage) throw ParseError("missing voltage line (truncated?)", 0);
  std::sort(triples.begin(), triples.end());
  t.triples = std::move(triples);
  return abelian_cover(t, *voltage);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

ComplexDescription read_complex_file(const std::filesystem::path& path) { return parse_complex(read_text_file(path)); }

}  // namespace zeta3
