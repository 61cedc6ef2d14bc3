#pragma once

#include <cstddef>
#include <vector>

#include "zeta3/numeric.hpp"
#include "zeta3/polynomial.hpp"
#include "zeta3/sparse_matrix.hpp"

namespace zeta3 {

/// [tr(M), tr(M^2), ..., tr(M^max_power)], exact. Uses dense powers built by
/// repeated right-multiplication with the sparse matrix.
std::vector<Integer> trace_powers(const SparseIntegerMatrix& m, std::size_t max_power);

/// Reverse characteristic polynomial det(I - uM). Coefficients come from the
/// power traces through Newton's identities; every division by k must be
/// exact or InternalError is raised.
IntegerPolynomial char_rev(const SparseIntegerMatrix& m);

}  // namespace zeta3
