#include <string>

#include "zeta3/construct.hpp"
#include "zeta3/error.hpp"

namespace zeta3 {

ComplexDescription base_quotient(const TrianglePresentation& t) { return abelian_cover(t, zero_voltage(t)); }

ComplexDescription abelian_cover(const TrianglePresentation& t, const VoltageAssignment& v) {
  if (auto bad = presentation_violations(t); !bad.empty()) {
    throw ConstructionError("invalid presentation: " + bad.front());
  }
  if (auto bad = voltage_violations(t, v); !bad.empty()) {
    throw ConstructionError("invalid voltage assignment: " + bad.front());
  }
  const Id m = v.modulus;
  if (const std::size_t order = generated_subgroup_order(v); order != static_cast<std::size_t>(3 * m)) {
    throw ConstructionError("disconnected cover: the labels (1, c(x)) generate a subgroup of order " +
                            std::to_string(order) + " in Z/3 x Z/" + std::to_string(m) + ", not all " +
                            std::to_string(3 * m) + " elements");
  }

  const Id n = static_cast<Id>(t.generator_count());
  auto label = [&](int x) { return static_cast<Id>(v.labels[static_cast<std::size_t>(x)]); };
  auto vertex_id = [&](Id type, Id s) { return (type % 3) * m + ((s % m) + m) % m; };
  auto step = [&](Id g, int x) { return vertex_id(g / m + 1, g % m + label(x)); };

  ComplexDescription cx;
  cx.q = t.q();
  for (Id type = 0; type < 3; ++type) {
    for (Id s = 0; s < m; ++s) cx.vertices.push_back({vertex_id(type, s), static_cast<int>(type)});
  }
  for (Id g = 0; g < 3 * m; ++g) {
    for (int x = 0; x < n; ++x) cx.edges.push_back({g * n + x, g, step(g, x)});
  }
  for (Id s = 0; s < m; ++s) {
    const Id g0 = vertex_id(0, s);
    for (const auto& [x, y, z] : t.triples) {
      const Id g1 = step(g0, x);
      const Id g2 = step(g1, y);
      cx.chambers.push_back({{g0 * n + x, g1 * n + y, g2 * n + z}});
    }
  }
  cx.origin = PresentedOrigin{t, v};
  return cx;
}

}  // namespace zeta3
