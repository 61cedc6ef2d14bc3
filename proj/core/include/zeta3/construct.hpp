#pragma once

#include "zeta3/complex.hpp"
#include "zeta3/plane.hpp"
#include "zeta3/presentation.hpp"

namespace zeta3 {

/// Quotient on the three type cosets: vertex g has type g, edge (g, x) runs
/// g -> g + 1 and has id g * N + x with N = q^2 + q + 1.
/// Same as abelian_cover(t, zero_voltage(t)).
ComplexDescription base_quotient(const TrianglePresentation& t);

/// Cover with vertices Z/3 x Z/m. Vertex (type, s) has id type * m + s; edge
/// (g, x) has id g * N + x and runs g -> g + (1, c(x)). Chamber s * |T| + k
/// is the triangle of the k-th triple (x, y, z) at type-0 vertex (0, s):
/// (g, x), (g + (1, c(x)), y), (g + (2, c(x) + c(y)), z).
///
/// Throws ConstructionError when t or v is invalid or the labels (1, c(x))
/// do not generate Z/3 x Z/m.
ComplexDescription abelian_cover(const TrianglePresentation& t, const VoltageAssignment& v);

}  // namespace zeta3
