#pragma once

#include <optional>
#include <string>

#include "zeta3/complex.hpp"
#include "zeta3/sparse_matrix.hpp"

namespace zeta3 {

enum class OperatorKind { A1, A2, LE, LB };

std::string to_string(OperatorKind op);
std::optional<OperatorKind> parse_operator(const std::string& name);

/// Which continuation rule builds L_E and L_B. Automatic picks Presented for
/// presentation-backed complexes and Geometric otherwise.
enum class OperatorRule { Automatic, Presented, Geometric };

/// A1[u][v] = number of type-one edges u -> v. Rows and columns follow the
/// vertex record order.
SparseIntegerMatrix build_A1(const ComplexDescription& cx);

/// Transpose of A1.
SparseIntegerMatrix build_A2(const ComplexDescription& cx);

/// Type-one edge continuation operator, indexed by edge record order.
///
/// Presented: (g, x) -> (g + (1, c(x)), y) for every y off lambda(x).
/// Geometric: e -> e' for every edge e' leaving head(e), minus one for each
/// chamber position where e' follows e.
/// Row sums are q^2 either way.
SparseIntegerMatrix build_LE(const ComplexDescription& cx, OperatorRule rule = OperatorRule::Automatic);

/// Directed chamber operator; index 3 * chamber + rotation.
///
/// Presented: (g, (x, y, z)) -> (g + (1, c(x)), (y, s, r)) for (y, s, r) in T
/// with s != z.
/// Geometric: (c, r) -> every (c', r') whose starting edge is the edge of c
/// in position r + 1, except (c, r + 1) itself.
/// Row sums are q either way.
SparseIntegerMatrix build_LB(const ComplexDescription& cx, OperatorRule rule = OperatorRule::Automatic);

SparseIntegerMatrix build_operator(const ComplexDescription& cx, OperatorKind op,
                                   OperatorRule rule = OperatorRule::Automatic);

}  // namespace zeta3
