#include "zeta3/complex.hpp"

#include <algorithm>
#include <map>

#include "zeta3/error.hpp"

namespace zeta3 {

namespace {

std::string vertex_name(Id id) { return "vertex " + std::to_string(id); }
std::string edge_name(Id id) { return "edge " + std::to_string(id); }
std::string chamber_name(std::size_t c) { return "chamber " + std::to_string(c); }

int mod3(int t) { return ((t % 3) + 3) % 3; }

}  // namespace

bool structurally_equal(const ComplexDescription& a, const ComplexDescription& b) {
  if (a.q != b.q || a.vertices != b.vertices || a.edges != b.edges || a.chambers != b.chambers) return false;
  if (a.origin.has_value() != b.origin.has_value()) return false;
  if (!a.origin) return true;
  const auto& x = *a.origin;
  const auto& y = *b.origin;
  return x.presentation.lambda == y.presentation.lambda && x.presentation.triples == y.presentation.triples &&
         x.presentation.q() == y.presentation.q() && x.voltage == y.voltage;
}

bool ValidationReport::structural() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.kind == ViolationKind::Structural; });
}

std::size_t ValidationReport::count(const std::string& rule) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [&](const Violation& v) { return v.rule == rule; }));
}

ValidationReport validate(const ComplexDescription& cx) {
  ValidationReport report;
  auto structural = [&](std::string rule, std::string subject, std::string detail) {
    report.violations.push_back({ViolationKind::Structural, std::move(rule), std::move(subject), std::move(detail)});
  };
  auto axiom = [&](std::string rule, std::string subject, std::string detail) {
    report.violations.push_back({ViolationKind::Axiom, std::move(rule), std::move(subject), std::move(detail)});
  };

  if (cx.q < 2) structural("bad-q", "complex", "q = " + std::to_string(cx.q) + " is below 2");
  if (cx.vertices.empty()) structural("empty-complex", "complex", "no vertices");

  std::map<Id, int> type_of;
  for (const auto& v : cx.vertices) {
    if (v.type < 0 || v.type > 2) structural("bad-type", vertex_name(v.id), "type " + std::to_string(v.type) + " not in 0..2");
    if (!type_of.emplace(v.id, v.type).second) structural("duplicate-vertex", vertex_name(v.id), "id used twice");
  }
  std::map<Id, const EdgeRecord*> edge_of;
  for (const auto& e : cx.edges) {
    if (!edge_of.emplace(e.id, &e).second) structural("duplicate-edge", edge_name(e.id), "id used twice");
    if (!type_of.count(e.tail)) structural("missing-vertex", edge_name(e.id), "tail " + std::to_string(e.tail) + " does not exist");
    if (!type_of.count(e.head)) structural("missing-vertex", edge_name(e.id), "head " + std::to_string(e.head) + " does not exist");
  }
  for (std::size_t c = 0; c < cx.chambers.size(); ++c) {
    for (Id e : cx.chambers[c].edges) {
      if (!edge_of.count(e)) structural("missing-edge", chamber_name(c), "edge " + std::to_string(e) + " does not exist");
    }
  }
  if (cx.origin) {
    for (auto& msg : presentation_violations(cx.origin->presentation)) structural("presentation", "presentation", msg);
    if (report.valid()) {
      for (auto& msg : voltage_violations(cx.origin->presentation, cx.origin->voltage)) structural("voltage", "voltage", msg);
    }
    if (cx.origin->presentation.q() != cx.q) {
      structural("presentation", "presentation", "plane order differs from q");
    }
  }
  if (!report.valid()) return report;

  const std::int64_t q = cx.q;
  const std::int64_t degree = q * q + q + 1;

  std::map<Id, std::int64_t> out_degree, in_degree;
  for (const auto& v : cx.vertices) out_degree[v.id] = in_degree[v.id] = 0;
  for (const auto& e : cx.edges) {
    ++out_degree[e.tail];
    ++in_degree[e.head];
    if (mod3(type_of[e.tail] + 1) != type_of[e.head]) {
      axiom("edge-type-pattern", edge_name(e.id),
            "tail type " + std::to_string(type_of[e.tail]) + ", head type " + std::to_string(type_of[e.head]));
    }
  }
  for (const auto& v : cx.vertices) {
    if (out_degree[v.id] != degree) {
      axiom("vertex-out-degree", vertex_name(v.id),
            std::to_string(out_degree[v.id]) + " outgoing edges, expected " + std::to_string(degree));
    }
    if (in_degree[v.id] != degree) {
      axiom("vertex-in-degree", vertex_name(v.id),
            std::to_string(in_degree[v.id]) + " incoming edges, expected " + std::to_string(degree));
    }
  }

  std::array<std::size_t, 3> per_type{};
  for (const auto& v : cx.vertices) ++per_type[static_cast<std::size_t>(v.type)];
  if (per_type[0] != per_type[1] || per_type[1] != per_type[2]) {
    axiom("type-balance", "complex",
          "type classes of sizes " + std::to_string(per_type[0]) + ", " + std::to_string(per_type[1]) + ", " +
              std::to_string(per_type[2]));
  }

  std::map<Id, std::int64_t> incidences;
  for (const auto& e : cx.edges) incidences[e.id] = 0;
  for (std::size_t c = 0; c < cx.chambers.size(); ++c) {
    const auto& ids = cx.chambers[c].edges;
    for (Id e : ids) ++incidences[e];
    for (int r = 0; r < 3; ++r) {
      const EdgeRecord& a = *edge_of[ids[static_cast<std::size_t>(r)]];
      const EdgeRecord& b = *edge_of[ids[static_cast<std::size_t>((r + 1) % 3)]];
      if (type_of[a.tail] != r) {
        axiom("chamber-cycle", chamber_name(c),
              "edge " + std::to_string(a.id) + " in position " + std::to_string(r) + " leaves a type-" +
                  std::to_string(type_of[a.tail]) + " vertex");
      }
      if (a.head != b.tail) {
        axiom("chamber-cycle", chamber_name(c),
              "edge " + std::to_string(a.id) + " does not end where edge " + std::to_string(b.id) + " starts");
      }
    }
  }
  for (const auto& e : cx.edges) {
    if (incidences[e.id] != q + 1) {
      axiom("edge-chamber-count", edge_name(e.id),
            "edge in " + std::to_string(incidences[e.id]) + " chambers, expected q+1 = " + std::to_string(q + 1));
    }
  }
  return report;
}

void require_valid(const ComplexDescription& cx) {
  const ValidationReport report = validate(cx);
  if (report.valid()) return;
  const Violation& v = report.violations.front();
  throw InvalidComplex("invalid complex: " + v.rule + " at " + v.subject + ": " + v.detail + " (" +
                       std::to_string(report.violations.size()) + " violations)");
}

ComplexCounts counts(const ComplexDescription& cx) {
  require_valid(cx);
  ComplexCounts c;
  c.n0 = static_cast<std::int64_t>(cx.vertices.size());
  c.n1 = static_cast<std::int64_t>(cx.edges.size());
  c.n2 = static_cast<std::int64_t>(cx.chambers.size());
  c.chi = c.n0 - c.n1 + c.n2;
  return c;
}

std::vector<DirectedChamber> directed_chambers(const ComplexDescription& cx) {
  require_valid(cx);
  std::vector<DirectedChamber> out;
  out.reserve(3 * cx.chambers.size());
  for (std::size_t c = 0; c < cx.chambers.size(); ++c) {
    for (int r = 0; r < 3; ++r) out.push_back({c, r});
  }
  return out;
}

ComplexDescription canonicalize(ComplexDescription cx) {
  std::sort(cx.vertices.begin(), cx.vertices.end(),
            [](const VertexRecord& a, const VertexRecord& b) { return a.id < b.id; });
  std::sort(cx.edges.begin(), cx.edges.end(), [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
  std::sort(cx.chambers.begin(), cx.chambers.end());
  return cx;
}

ComplexIndex::ComplexIndex(const ComplexDescription& cx) {
  for (std::size_t i = 0; i < cx.vertices.size(); ++i) vertex_pos_.emplace(cx.vertices[i].id, i);
  for (std::size_t i = 0; i < cx.edges.size(); ++i) edge_pos_.emplace(cx.edges[i].id, i);
  out_.resize(cx.vertices.size());
  for (std::size_t i = 0; i < cx.edges.size(); ++i) {
    tails_.push_back(vertex(cx.edges[i].tail));
    heads_.push_back(vertex(cx.edges[i].head));
    out_[tails_.back()].push_back(i);
  }
  for (const auto& ch : cx.chambers) chambers_.push_back({edge(ch.edges[0]), edge(ch.edges[1]), edge(ch.edges[2])});
}

std::size_t ComplexIndex::vertex(Id id) const {
  auto it = vertex_pos_.find(id);
  if (it == vertex_pos_.end()) throw InvalidComplex("unknown vertex id " + std::to_string(id));
  return it->second;
}

std::size_t ComplexIndex::edge(Id id) const {
  auto it = edge_pos_.find(id);
  if (it == edge_pos_.end()) throw InvalidComplex("unknown edge id " + std::to_string(id));
  return it->second;
}

}  // namespace zeta3
