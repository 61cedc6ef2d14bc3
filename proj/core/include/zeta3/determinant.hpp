#pragma once

#include <cstddef>
#include <cstdint>

#include "zeta3/dense_matrix.hpp"
#include "zeta3/numeric.hpp"
#include "zeta3/polynomial.hpp"

namespace zeta3 {

using IntegerMatrix = DenseMatrix<Integer>;
using PolynomialMatrix = DenseMatrix<IntegerPolynomial>;

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_integer(IntegerMatrix m);

/// Entrywise evaluation of a polynomial matrix at an integer point.
IntegerMatrix evaluate_at(const PolynomialMatrix& m, const Integer& x);

struct DetPolyOptions {
  /// Re-evaluate the interpolated determinant at `self_check_points` random
  /// integers and compare with det_integer of the evaluated matrix.
  bool self_check = false;
  int self_check_points = 5;
  std::uint64_t seed = 0x5eed;
};

/// Process-wide default for DetPolyOptions::self_check. Initialized from the
/// ZETA3_SELF_CHECK environment variable ("1" enables it).
bool self_check_default();
void set_self_check_default(bool enabled);

/// Number of self-check comparisons performed so far (all of them passed,
/// since a failed comparison throws InternalError).
std::uint64_t self_check_count();

/// Determinant of a square polynomial matrix whose determinant has degree at
/// most `degree_bound`. Evaluates at degree_bound + 1 integers 0, 1, -1, 2,
/// -2, ... and Lagrange-interpolates over the rationals; a non-integral
/// coefficient raises InternalError.
IntegerPolynomial det_poly_matrix(const PolynomialMatrix& m, std::size_t degree_bound,
                                  const DetPolyOptions& options);
IntegerPolynomial det_poly_matrix(const PolynomialMatrix& m, std::size_t degree_bound);

}  // namespace zeta3
