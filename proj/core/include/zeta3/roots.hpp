#pragma once

#include <complex>
#include <vector>

#include "zeta3/polynomial.hpp"

namespace zeta3 {

struct PolynomialZero {
  std::complex<double> value;
  unsigned multiplicity = 1;
};

struct RootOptions {
  /// Required relative accuracy of every reported zero.
  double relative_accuracy = 1e-9;
  unsigned max_iterations = 800;
};

/// All complex zeros of a nonzero polynomial, grouped by multiplicity.
///
/// The polynomial is split by an exact squarefree decomposition; each
/// squarefree part is solved by Aberth-Ehrlich iteration in long double, and
/// every root is then polished by Newton steps in MPFR arithmetic whose
/// precision scales with the coefficient size. A polished root set is accepted
/// only when every final Newton correction is far below both the requested
/// accuracy and the minimal root separation; otherwise the Aberth iteration is
/// rerun in MPFR. Throws RootFindingError when that also fails.
std::vector<PolynomialZero> polynomial_zeros(const IntegerPolynomial& p,
                                             const RootOptions& options = {});

/// Moduli of all zeros, repeated by multiplicity, ascending.
std::vector<double> zero_moduli(const IntegerPolynomial& p, const RootOptions& options = {});

}  // namespace zeta3
