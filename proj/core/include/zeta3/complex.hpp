#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zeta3/presentation.hpp"

namespace zeta3 {

using Id = std::int64_t;

struct VertexRecord {
  Id id = 0;
  int type = 0;
  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

/// Directed type-one edge: type(head) = type(tail) + 1 mod 3.
struct EdgeRecord {
  Id id = 0;
  Id tail = 0;
  Id head = 0;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Edge ids (e01, e12, e20) of a triangle through vertex types 0 -> 1 -> 2 -> 0.
struct ChamberRecord {
  std::array<Id, 3> edges{};
  friend bool operator==(const ChamberRecord&, const ChamberRecord&) = default;
  friend auto operator<=>(const ChamberRecord&, const ChamberRecord&) = default;
};

/// Presentation data a complex was built from.
struct PresentedOrigin {
  TrianglePresentation presentation;
  VoltageAssignment voltage;
};

/// Finite 2-dimensional complex with Z/3-typed vertices. Edges and chambers
/// are multisets: quotients of small size have parallel edges and repeated
/// incidences.
struct ComplexDescription {
  int q = 0;
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<ChamberRecord> chambers;
  /// Set for presentation-backed complexes.
  std::optional<PresentedOrigin> origin;

  bool presented() const noexcept { return origin.has_value(); }
};

bool structurally_equal(const ComplexDescription& a, const ComplexDescription& b);

enum class ViolationKind { Structural, Axiom };

struct Violation {
  ViolationKind kind = ViolationKind::Axiom;
  /// Short rule name, e.g. "edge-chamber-count".
  std::string rule;
  /// Offending object, e.g. "edge 12" or "chamber 3".
  std::string subject;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool structural() const;
  std::size_t count(const std::string& rule) const;
};

/// Structural rules: duplicate-vertex, duplicate-edge, missing-vertex,
/// missing-edge, bad-type, bad-q, empty-complex, presentation, voltage.
/// Axiom rules (checked only when the structure is sound): vertex-out-degree,
/// vertex-in-degree, edge-chamber-count, type-balance, edge-type-pattern,
/// chamber-cycle.
ValidationReport validate(const ComplexDescription& cx);

/// Throws InvalidComplex with the first violation when cx is not valid.
void require_valid(const ComplexDescription& cx);

struct ComplexCounts {
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t chi = 0;
  friend bool operator==(const ComplexCounts&, const ComplexCounts&) = default;
};

ComplexCounts counts(const ComplexDescription& cx);

/// A chamber with a distinguished starting edge: rotation r starts at the
/// edge in position r of (e01, e12, e20).
struct DirectedChamber {
  std::size_t chamber = 0;
  int rotation = 0;
  friend bool operator==(const DirectedChamber&, const DirectedChamber&) = default;
};

/// 3 * N2 entries ordered by (chamber, rotation); entry i has index
/// 3 * chamber + rotation in L_B.
std::vector<DirectedChamber> directed_chambers(const ComplexDescription& cx);

/// Copy with vertices and edges sorted by id and chambers sorted
/// lexicographically.
ComplexDescription canonicalize(ComplexDescription cx);

/// Dense positions of records in a structurally sound complex (record order).
class ComplexIndex {
 public:
  explicit ComplexIndex(const ComplexDescription& cx);

  std::size_t vertex(Id id) const;
  std::size_t edge(Id id) const;
  std::size_t tail(std::size_t edge) const { return tails_[edge]; }
  std::size_t head(std::size_t edge) const { return heads_[edge]; }
  /// Dense edge indices of chamber c in positions 0, 1, 2.
  const std::array<std::size_t, 3>& chamber(std::size_t c) const { return chambers_[c]; }
  /// Dense indices of edges leaving vertex v, ascending.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

 private:
  std::unordered_map<Id, std::size_t> vertex_pos_;
  std::unordered_map<Id, std::size_t> edge_pos_;
  std::vector<std::size_t> tails_;
  std::vector<std::size_t> heads_;
  std::vector<std::array<std::size_t, 3>> chambers_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace zeta3
