#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeta3/numeric.hpp"

namespace zeta3 {

/// Dense univariate polynomial in u with arbitrary-precision integer
/// coefficients, lowest degree first. Trailing zeros are never stored, so the
/// zero polynomial has an empty coefficient list and degree -1.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coefficients);
  IntegerPolynomial(std::initializer_list<long long> coefficients);

  static IntegerPolynomial constant(const Integer& c);
  static IntegerPolynomial monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of u^i; zero beyond the degree.
  Integer coefficient(std::size_t i) const;
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  const Integer& leading_coefficient() const;

  IntegerPolynomial& operator+=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator-=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const Integer& c);

  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(IntegerPolynomial a, const Integer& c) { return a *= c; }
  IntegerPolynomial operator-() const;

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  IntegerPolynomial pow(unsigned exponent) const;
  /// P(u^k).
  IntegerPolynomial substitute_power(unsigned k) const;
  /// P(c u).
  IntegerPolynomial scale_variable(const Integer& c) const;
  IntegerPolynomial derivative() const;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;

  Integer content() const;
  /// P / content(P), with positive leading coefficient.
  IntegerPolynomial primitive_part() const;

  /// Human-readable form, e.g. "1 - 3*u^2".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// Quotient of a / b when b divides a over the integers.
std::optional<IntegerPolynomial> try_exact_divide(const IntegerPolynomial& a,
                                                  const IntegerPolynomial& b);

/// Quotient of a / b. Throws InexactDivision on a nonzero remainder or a
/// quotient that is not integral.
IntegerPolynomial exact_divide(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Largest k such that b^k divides a exactly (b must not be a unit).
unsigned divisibility_order(IntegerPolynomial a, const IntegerPolynomial& b);

/// Power series 1/P to order `order` inclusive (order + 1 coefficients).
/// Requires P(0) = +-1 so the inverse stays integral.
std::vector<Integer> series_inverse(const IntegerPolynomial& p, std::size_t order);

/// Coefficients [c_1, ..., c_order] of u P'(u) / P(u) as a power series.
/// Requires P(0) = +-1.
std::vector<Integer> log_derivative_series(const IntegerPolynomial& p, std::size_t order);

/// Greatest common divisor, primitive with positive leading coefficient.
IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// One factor of a squarefree decomposition: `factor` is squarefree and
/// appears to the power `multiplicity`.
struct SquarefreeFactor {
  IntegerPolynomial factor;
  unsigned multiplicity;
};

/// Yun's algorithm. The product of factor^multiplicity equals P up to a
/// constant; factors of degree zero are omitted.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntegerPolynomial& p);

}  // namespace zeta3
