#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace zeta3 {

/// Finite projective plane of order q on points and lines 0..q^2+q.
///
/// Points and lines are numbered by their normalized homogeneous coordinates
/// over Z/q (first nonzero coordinate equal to 1), in lexicographic order; a
/// point lies on a line when the dot product of the two vectors vanishes.
struct IncidenceStructure {
  int q = 0;
  std::vector<std::array<int, 3>> point_coordinates;
  std::vector<std::array<int, 3>> line_coordinates;
  /// incidence[point][line]
  std::vector<std::vector<bool>> incidence;

  std::size_t size() const noexcept { return point_coordinates.size(); }
  bool incident(std::size_t point, std::size_t line) const { return incidence[point][line]; }
  std::vector<int> points_on(std::size_t line) const;
  std::vector<int> lines_through(std::size_t point) const;
  std::size_t incidence_count() const;
};

/// The plane over Z/q for q in {2, 3}; other orders raise ConstructionError.
IncidenceStructure projective_plane(int q);

/// Violated projective-plane axioms; empty for a valid plane.
std::vector<std::string> plane_axiom_violations(const IncidenceStructure& plane);

}  // namespace zeta3
