#include <gtest/gtest.h>

#include "support.hpp"
#include "zeta3/charpoly.hpp"
#include "zeta3/determinant.hpp"
#include "zeta3/operators.hpp"

using namespace zeta3;
using zeta3::testing::cofactor_char;
using zeta3::testing::random_matrix;

TEST(CharPoly, MatchesCofactorExpansion) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (unsigned seed = 1; seed <= 4; ++seed) {
      const auto m = random_matrix(n, -3, 3, seed * 31 + static_cast<unsigned>(n));
      EXPECT_EQ(char_rev(m), cofactor_char(m, -1)) << "n = " << n << " seed " << seed;
      EXPECT_EQ(char_rev(-m), cofactor_char(m, 1));
    }
  }
}

TEST(CharPoly, TransposeInvariant) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const auto m = random_matrix(6, -2, 5, seed);
    EXPECT_EQ(char_rev(m), char_rev(m.transpose()));
    EXPECT_EQ(char_rev(m).substitute_power(2), char_rev(m.transpose()).substitute_power(2));
  }
}

TEST(CharPoly, NilpotentAndIdentity) {
  SparseIntegerMatrix shift(4);
  for (std::size_t i = 0; i + 1 < 4; ++i) shift.add(i, i + 1, 1);
  EXPECT_EQ(char_rev(shift), (IntegerPolynomial{1}));
  SparseIntegerMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id.add(i, i, 2);
  EXPECT_EQ(char_rev(id), (IntegerPolynomial{1, -2}).pow(3));
}

TEST(CharPoly, TracePowers) {
  // Cyclic permutation of order 3: tr(P^k) = 3 when 3 | k, else 0.
  SparseIntegerMatrix p(3);
  for (std::size_t i = 0; i < 3; ++i) p.add(i, (i + 1) % 3, 1);
  const auto t = trace_powers(p, 7);
  ASSERT_EQ(t.size(), 7u);
  for (std::size_t k = 1; k <= 7; ++k) EXPECT_EQ(t[k - 1], k % 3 == 0 ? 3 : 0);
  EXPECT_TRUE(trace_powers(p, 0).empty());
}

TEST(CharPoly, AgreesWithInterpolatedDeterminant) {
  const auto m = random_matrix(12, -1, 2, 5);
  PolynomialMatrix pm(12, 12);
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 12; ++j) {
      pm(i, j) = IntegerPolynomial::monomial(Integer(-m.at(i, j)), 1);
      if (i == j) pm(i, j) += IntegerPolynomial{1};
    }
  }
  EXPECT_EQ(char_rev(m), det_poly_matrix(pm, 12, DetPolyOptions{true, 5, 8}));
}

TEST(CharPoly, SmallExamples) {
  EXPECT_EQ(char_rev(SparseIntegerMatrix(4)), (IntegerPolynomial{1}));
  SparseIntegerMatrix two(1);
  two.add(0, 0, 2);
  EXPECT_EQ(char_rev(two), (IntegerPolynomial{1, -2}));
}

TEST(CharPoly, BaseLBAtOneIsDetOfIMinusLB) {
  const SparseIntegerMatrix lb = build_LB(zeta3::testing::q2_base());
  IntegerMatrix m = lb.to_dense();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? 1 : 0) - m(i, j);
  }
  const IntegerPolynomial p = char_rev(lb);
  EXPECT_EQ(p.degree(), 63);
  EXPECT_EQ(p.coefficient(1), -lb.trace());
  EXPECT_EQ(p.evaluate(Integer(1)), det_integer(m));
}
