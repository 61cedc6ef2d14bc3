#include "zeta3/plane.hpp"

#include <algorithm>

#include "zeta3/error.hpp"

namespace zeta3 {

namespace {

std::vector<std::array<int, 3>> normalized_vectors(int q) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const std::array<int, 3> v{a, b, c};
        auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (lead != v.end() && *lead == 1) out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<int> IncidenceStructure::points_on(std::size_t line) const {
  std::vector<int> out;
  for (std::size_t p = 0; p < size(); ++p) {
    if (incidence[p][line]) out.push_back(static_cast<int>(p));
  }
  return out;
}

std::vector<int> IncidenceStructure::lines_through(std::size_t point) const {
  std::vector<int> out;
  for (std::size_t l = 0; l < size(); ++l) {
    if (incidence[point][l]) out.push_back(static_cast<int>(l));
  }
  return out;
}

std::size_t IncidenceStructure::incidence_count() const {
  std::size_t n = 0;
  for (const auto& row : incidence) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return n;
}

IncidenceStructure projective_plane(int q) {
  if (q != 2 && q != 3) {
    throw ConstructionError("projective_plane: unsupported order q = " + std::to_string(q) +
                            " (supported: 2, 3)");
  }
  IncidenceStructure plane;
  plane.q = q;
  plane.point_coordinates = normalized_vectors(q);
  plane.line_coordinates = plane.point_coordinates;
  const std::size_t n = plane.point_coordinates.size();
  plane.incidence.assign(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t l = 0; l < n; ++l) {
      const auto& x = plane.point_coordinates[p];
      const auto& y = plane.line_coordinates[l];
      plane.incidence[p][l] = (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0;
    }
  }
  return plane;
}

std::vector<std::string> plane_axiom_violations(const IncidenceStructure& plane) {
  std::vector<std::string> out;
  const std::size_t n = plane.size();
  const std::size_t expected = static_cast<std::size_t>(plane.q * plane.q + plane.q + 1);
  if (n != expected) {
    out.push_back("plane has " + std::to_string(n) + " points, expected " + std::to_string(expected));
    return out;
  }
  const std::size_t k = static_cast<std::size_t>(plane.q + 1);
  for (std::size_t l = 0; l < n; ++l) {
    if (plane.points_on(l).size() != k) out.push_back("line " + std::to_string(l) + " does not have q+1 points");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (plane.lines_through(p).size() != k) out.push_back("point " + std::to_string(p) + " is not on q+1 lines");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t common = 0;
      for (std::size_t l = 0; l < n; ++l) common += (plane.incidence[a][l] && plane.incidence[b][l]) ? 1 : 0;
      if (common != 1) {
        out.push_back("points " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                      std::to_string(common) + " lines");
      }
    }
  }
  return out;
}

}  // namespace zeta3
