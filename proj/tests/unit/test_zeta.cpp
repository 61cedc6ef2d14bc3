#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "zeta3/charpoly.hpp"
#include "zeta3/construct.hpp"
#include "zeta3/determinant.hpp"
#include "zeta3/error.hpp"
#include "zeta3/zeta.hpp"

using namespace zeta3;
using zeta3::testing::cofactor_det;
using zeta3::testing::q2_base;

namespace {

IntegerPolynomial det_one_plus(const SparseIntegerMatrix& m, int sign) {
  const std::size_t n = m.dimension();
  PolynomialMatrix pm(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pm(i, j) = IntegerPolynomial::monomial(Integer(sign * m.at(i, j)), 1);
      if (i == j) pm(i, j) += IntegerPolynomial{1};
    }
  }
  return det_poly_matrix(pm, n, DetPolyOptions{true, 5, 17});
}

}  // namespace

TEST(Zeta, BaseHeckeDeterminantFromCofactors) {
  // A1 = 7 P with P the type shift, A2 = 7 P^T; expand the 3x3 matrix by hand.
  const IntegerPolynomial one{1}, a{0, -7}, b{0, 0, 14}, d{1, 0, 0, -8};
  std::vector<std::vector<IntegerPolynomial>> m{{d, a, b}, {b, d, a}, {a, b, d}};
  const IntegerPolynomial oracle = cofactor_det(m);
  EXPECT_EQ(oracle, (IntegerPolynomial{1, 0, 0, -73, 0, 0, 584, 0, 0, -512}));
  EXPECT_EQ(zeta_parts(q2_base()).pa, oracle);
}

TEST(Zeta, CharRevMatchesInterpolatedDeterminants) {
  const ComplexDescription& cx = q2_base();
  const OperatorSet ops = build_operators(cx);
  const ZetaParts parts = zeta_parts(cx);
  EXPECT_EQ(parts.pe, det_one_plus(ops.le, -1));
  EXPECT_EQ(parts.pb, det_one_plus(ops.lb, 1));
  EXPECT_EQ(parts.pe.degree(), 21);
  EXPECT_EQ(parts.pb.degree(), 63);
}

TEST(Zeta, TransposeGivesTheSameSquaredTerm) {
  const OperatorSet ops = build_operators(q2_base());
  EXPECT_EQ(char_rev(ops.le.transpose()).substitute_power(2), char_rev(ops.le).substitute_power(2));
}

TEST(Zeta, IdentityOnBaseAndCovers) {
  std::vector<ComplexDescription> all{q2_base()};
  for (auto& cx : zeta3::testing::q2_covers(2)) all.push_back(std::move(cx));
  all.push_back(base_quotient(zeta3::testing::q3_presentation()));
  for (const auto& cx : all) {
    for (auto rule : {OperatorRule::Presented, OperatorRule::Geometric}) {
      const IdentityVerdict v = verify_identity(zeta_parts(cx, rule));
      EXPECT_TRUE(v.holds);
      EXPECT_FALSE(v.witness);
      EXPECT_EQ(v.lhs, v.rhs);
    }
  }
}

TEST(Zeta, SingleEntryMutationsBreakTheIdentity) {
  const ComplexDescription& cx = q2_base();
  const OperatorSet ops = build_operators(cx);
  const ComplexCounts c = counts(cx);
  std::mt19937 rng(2024);
  for (int which = 0; which < 4; ++which) {
    for (int rep = 0; rep < 6; ++rep) {
      OperatorSet mutated = ops;
      SparseIntegerMatrix& m = which == 0 ? mutated.a1 : which == 1 ? mutated.a2 : which == 2 ? mutated.le : mutated.lb;
      std::uniform_int_distribution<std::size_t> pos(0, m.dimension() - 1);
      const std::size_t r = pos(rng), col = pos(rng);
      m.add(r, col, rep % 2 ? 1 : -1);
      const IdentityVerdict v = verify_identity(assemble_parts(cx.q, c, mutated));
      EXPECT_FALSE(v.holds) << "operator " << which << " entry (" << r << ", " << col << ")";
      ASSERT_TRUE(v.witness);
      EXPECT_NE(v.witness->lhs, v.witness->rhs);
      EXPECT_EQ(v.lhs.coefficient(v.witness->index), v.witness->lhs);
    }
  }
}

TEST(Zeta, NegativeEulerCharacteristic) {
  // chi = -1: the (1 - u^3) factor moves to the right-hand side.
  ZetaParts p;
  p.q = 2;
  p.counts = {1, 2, 0, -1};
  p.pe = IntegerPolynomial{1, 0, 0, -1};
  p.pa = IntegerPolynomial{1, 0, 0, 0, 0, 0, -1};
  p.pb = IntegerPolynomial{1};
  EXPECT_TRUE(verify_identity(p).holds);
  p.pb = IntegerPolynomial{1, 1};
  EXPECT_FALSE(verify_identity(p).holds);
}

TEST(Zeta, WalkOracleMatchesTraces) {
  std::vector<ComplexDescription> all{q2_base(), zeta3::testing::q2_covers(2).front()};
  for (const auto& cx : all) {
    const auto tr = trace_powers(build_operators(cx).le, 6);
    for (std::size_t m = 1; m <= 6; ++m) EXPECT_EQ(walk_count_oracle(cx, m), tr[m - 1]) << "m = " << m;
  }
  EXPECT_THROW(walk_count_oracle(q2_base(), kMaxOracleLength + 1), Error);
}

TEST(Zeta, GeodesicCounts) {
  std::vector<ComplexDescription> all{q2_base()};
  for (auto& cx : zeta3::testing::q2_covers(2)) all.push_back(std::move(cx));
  for (const auto& cx : all) {
    const ZetaParts parts = zeta_parts(cx);
    const auto n = geodesic_counts(parts, 12);
    ASSERT_EQ(n.size(), 12u);
    EXPECT_EQ(n, geodesic_counts_from_traces(build_operators(cx).le, 12));
    for (const auto& x : n) EXPECT_GE(x, 0);
  }
  EXPECT_TRUE(geodesic_counts(zeta_parts(q2_base()), 0).empty());
}
