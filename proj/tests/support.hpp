#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "zeta3/complex.hpp"
#include "zeta3/determinant.hpp"
#include "zeta3/presentation.hpp"
#include "zeta3/sparse_matrix.hpp"

namespace zeta3::testing {

/// q = 2 presentation with at least four connected Z/2 covers (the CLI default).
const TrianglePresentation& q2_presentation();
/// Lexicographically first torsion-free q = 2 presentation.
const TrianglePresentation& q2_lex_first();
/// First q = 3 presentation with torsion allowed.
const TrianglePresentation& q3_presentation();

const ComplexDescription& q2_base();
/// All connected covers mod m of q2_presentation(), in solve_voltages order.
std::vector<ComplexDescription> q2_covers(int m);

/// Determinant by Laplace expansion along the first row. Exponential; only
/// for small matrices, as an oracle.
Integer cofactor_det(const std::vector<std::vector<Integer>>& m);
IntegerPolynomial cofactor_det(const std::vector<std::vector<IntegerPolynomial>>& m);

/// det(I + s u M) by cofactor expansion, s = +-1.
IntegerPolynomial cofactor_char(const SparseIntegerMatrix& m, int s);

/// Small matrix with entries in [lo, hi].
SparseIntegerMatrix random_matrix(std::size_t n, int lo, int hi, unsigned seed);

std::filesystem::path fixture(const std::string& name);

}  // namespace zeta3::testing
