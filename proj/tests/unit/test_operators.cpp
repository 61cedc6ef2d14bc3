#include <gtest/gtest.h>

#include "support.hpp"
#include "zeta3/complex.hpp"
#include "zeta3/construct.hpp"
#include "zeta3/error.hpp"
#include "zeta3/operators.hpp"

using namespace zeta3;

namespace {

std::vector<ComplexDescription> test_complexes() {
  std::vector<ComplexDescription> out{zeta3::testing::q2_base()};
  for (auto& cx : zeta3::testing::q2_covers(2)) out.push_back(std::move(cx));
  out.push_back(base_quotient(zeta3::testing::q3_presentation()));
  return out;
}

void expect_constant(const std::vector<std::int64_t>& sums, std::int64_t value, const char* what) {
  for (std::size_t i = 0; i < sums.size(); ++i) ASSERT_EQ(sums[i], value) << what << " index " << i;
}

}  // namespace

TEST(Operators, Regularity) {
  for (const auto& cx : test_complexes()) {
    const std::int64_t q = cx.q;
    const ComplexCounts c = counts(cx);
    const auto a1 = build_A1(cx);
    const auto le = build_LE(cx);
    const auto lb = build_LB(cx);
    EXPECT_EQ(a1.dimension(), static_cast<std::size_t>(c.n0));
    EXPECT_EQ(le.dimension(), static_cast<std::size_t>(c.n1));
    EXPECT_EQ(lb.dimension(), static_cast<std::size_t>(3 * c.n2));
    expect_constant(a1.row_sums(), q * q + q + 1, "A1 rows");
    expect_constant(a1.col_sums(), q * q + q + 1, "A1 cols");
    expect_constant(le.row_sums(), q * q, "L_E rows");
    expect_constant(le.col_sums(), q * q, "L_E cols");
    expect_constant(lb.row_sums(), q, "L_B rows");
    expect_constant(lb.col_sums(), q, "L_B cols");
  }
}

TEST(Operators, A2IsTheTranspose) {
  for (const auto& cx : test_complexes()) EXPECT_EQ(build_A2(cx), build_A1(cx).transpose());
}

TEST(Operators, A1RaisesTypeByOne) {
  for (const auto& cx : test_complexes()) {
    const auto a1 = build_A1(cx);
    for (const auto& e : a1.entries()) {
      EXPECT_EQ(cx.vertices[e.col].type, (cx.vertices[e.row].type + 1) % 3);
    }
  }
}

TEST(Operators, GeometricRuleMatchesPresentedRule) {
  for (const auto& cx : test_complexes()) {
    EXPECT_EQ(build_LE(cx, OperatorRule::Geometric), build_LE(cx, OperatorRule::Presented));
    EXPECT_EQ(build_LB(cx, OperatorRule::Geometric), build_LB(cx, OperatorRule::Presented));
  }
}

TEST(Operators, GeometricComplexUsesGeometricRule) {
  ComplexDescription cx = zeta3::testing::q2_base();
  const auto presented = build_LB(cx);
  cx.origin.reset();
  EXPECT_EQ(build_LB(cx), presented);
  EXPECT_THROW(build_LB(cx, OperatorRule::Presented), Error);
}

TEST(Operators, BaseA1IsSevenTimesTheTypeShift) {
  const auto a1 = build_A1(zeta3::testing::q2_base());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a1.at(i, j), j == (i + 1) % 3 ? 7 : 0);
  }
}

TEST(Operators, Names) {
  for (auto op : {OperatorKind::A1, OperatorKind::A2, OperatorKind::LE, OperatorKind::LB}) {
    EXPECT_EQ(parse_operator(to_string(op)), op);
  }
  EXPECT_FALSE(parse_operator("L_X").has_value());
}
