#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zeta3/plane.hpp"

namespace zeta3 {

/// Ordered triple (x, y, z) of points, read as the relation a_x a_y a_z = 1.
using Triple = std::array<int, 3>;

/// Triangle presentation over a projective plane: a point-to-line bijection
/// `lambda` and a rotation-closed set of admissible triples.
///
/// Invariants (checked by presentation_violations):
///   - (x, y, z) in T implies (y, z, x) in T;
///   - some (x, y, .) is in T exactly when y lies on lambda(x), and then the
///     completing z is unique;
///   - |T| = (q^2 + q + 1)(q + 1).
/// A triple (x, x, x) makes a_x a torsion element; it is allowed here but
/// reported by is_torsion_free.
struct TrianglePresentation {
  IncidenceStructure plane;
  std::vector<int> lambda;
  /// Sorted lexicographically.
  std::vector<Triple> triples;

  int q() const noexcept { return plane.q; }
  std::size_t generator_count() const noexcept { return plane.size(); }
  /// The z with (x, y, z) in T, if any.
  std::optional<int> completion(int x, int y) const;
  /// Position of a triple in `triples`, if present.
  std::optional<std::size_t> index_of(const Triple& t) const;
};

std::vector<std::string> presentation_violations(const TrianglePresentation& t);

/// True when T has no triple (x, x, x).
bool is_torsion_free(const TrianglePresentation& t);

/// Labels c : points -> Z/m with c(x) + c(y) + c(z) = 0 mod m on every triple.
struct VoltageAssignment {
  int modulus = 1;
  std::vector<int> labels;

  friend bool operator==(const VoltageAssignment&, const VoltageAssignment&) = default;
  friend auto operator<=>(const VoltageAssignment&, const VoltageAssignment&) = default;
};

VoltageAssignment zero_voltage(const TrianglePresentation& t, int modulus = 1);

/// Violated voltage conditions (wrong length, label out of range, nonzero
/// triple sum); empty when valid.
std::vector<std::string> voltage_violations(const TrianglePresentation& t, const VoltageAssignment& v);

/// Order of the subgroup of Z/3 x Z/m generated by the labels (1, c(x)).
std::size_t generated_subgroup_order(const VoltageAssignment& v);
bool generates_cover_group(const VoltageAssignment& v);

/// Every solution of c(x) + c(y) + c(z) = 0 (mod m) over the triples, in
/// lexicographic order of the label vectors. The zero assignment is always
/// first. Computed from the Smith normal form of the integer relation matrix.
std::vector<VoltageAssignment> solve_voltages(const TrianglePresentation& t, int modulus);

/// The solutions of solve_voltages that yield connected covers.
std::vector<VoltageAssignment> connected_voltages(const TrianglePresentation& t, int modulus);

struct CoverRequirement {
  int modulus = 2;
  std::size_t min_connected = 1;
};

struct PresentationSearchOptions {
  /// Admit triples (x, x, x). Rotation classes of all other triples have size
  /// 3, so a torsion-free T needs |T| divisible by 3; this fails for q = 3.
  bool allow_torsion = false;
  /// When set, presentations admitting fewer connected covers of the given
  /// modulus are skipped.
  std::optional<CoverRequirement> cover_requirement;
};

/// Presentations are ordered by the sequence lambda(0), lambda(1), ... and
/// then by the completion map (x, y) -> z over admissible pairs in
/// lexicographic order. Returns the first presentation in that order meeting
/// the options; throws ConstructionError when there is none.
///
/// Without a cover requirement each lambda(x) and then each completion is
/// fixed greedily to the smallest value that an exact existence check can
/// still extend to a full presentation. With one, presentations are
/// enumerated in order and filtered.
TrianglePresentation find_triangle_presentation(const IncidenceStructure& plane,
                                                const PresentationSearchOptions& options = {});

/// Calls `visit` on every presentation over the plane in the order above
/// until it returns true. Returns whether it stopped early.
bool for_each_triangle_presentation(const IncidenceStructure& plane, bool allow_torsion,
                                    const std::function<bool(const TrianglePresentation&)>& visit);

}  // namespace zeta3
