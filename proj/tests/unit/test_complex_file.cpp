#include <gtest/gtest.h>

#include "support.hpp"
#include "zeta3/complex_file.hpp"
#include "zeta3/construct.hpp"
#include "zeta3/error.hpp"

using namespace zeta3;
using zeta3::testing::fixture;
using zeta3::testing::q2_base;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_complex(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

}  // namespace

TEST(ComplexFile, RoundTripPresented) {
  for (const auto& cx : zeta3::testing::q2_covers(2)) {
    const std::string text = serialize_complex(cx);
    const ComplexDescription back = parse_complex(text);
    EXPECT_TRUE(structurally_equal(back, cx));
    ASSERT_TRUE(back.origin);
    EXPECT_EQ(back.origin->voltage, cx.origin->voltage);
    EXPECT_EQ(serialize_complex(back), text);
  }
}

TEST(ComplexFile, RoundTripGeometric) {
  const std::string text = serialize_complex(q2_base(), FileMode::Geometric);
  const ComplexDescription back = parse_complex(text);
  EXPECT_FALSE(back.origin);
  ComplexDescription geometric = q2_base();
  geometric.origin.reset();
  EXPECT_TRUE(structurally_equal(back, canonicalize(geometric)));
  EXPECT_EQ(serialize_complex(back), text);
}

TEST(ComplexFile, HeaderAndSections) {
  const std::string text = serialize_complex(q2_base());
  EXPECT_EQ(text.rfind("zeta3-complex v1\nq 2\nmode presented\n", 0), 0u);
  EXPECT_NE(text.find("\nvoltage 1 0 0 0 0 0 0 0\n"), std::string::npos);
}

TEST(ComplexFile, CommentsAndBlankLines) {
  std::string text = serialize_complex(q2_base());
  text.insert(text.find('\n') + 1, "# a comment\n\n");
  EXPECT_TRUE(structurally_equal(parse_complex(text), q2_base()));
}

TEST(ComplexFile, Fixtures) {
  EXPECT_TRUE(structurally_equal(read_complex_file(fixture("base_q2.txt")), q2_base()));
  EXPECT_EQ(counts(read_complex_file(fixture("cover_q2_m2.txt"))), (ComplexCounts{6, 42, 42, 6}));
  EXPECT_THROW(read_complex_file(fixture("truncated.txt")), ParseError);
  EXPECT_THROW(read_complex_file(fixture("no_such_file.txt")), IoError);
}

TEST(ComplexFile, Truncation) {
  const std::string text = serialize_complex(q2_base());
  EXPECT_THROW(parse_complex(text.substr(0, text.size() - 1)), ParseError);
  // Cut at a line boundary inside the triple list.
  const std::size_t cut = text.find("triple", text.find("triple") + 1);
  EXPECT_THROW(parse_complex(text.substr(0, cut)), ParseError);
  const std::string geo = serialize_complex(q2_base(), FileMode::Geometric);
  EXPECT_THROW(parse_complex(geo.substr(0, geo.find("chamber"))), ParseError);
  EXPECT_THROW(parse_complex(""), ParseError);
}

TEST(ComplexFile, MalformedLinesCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("zeta3-complex v2\n"), 1u);
  EXPECT_EQ(parse_error_line("zeta3-complex v1\nq two\n"), 2u);
  EXPECT_EQ(parse_error_line("zeta3-complex v1\nq 2\nmode sideways\n"), 3u);
  EXPECT_EQ(parse_error_line("zeta3-complex v1\nq 2\nmode geometric\nvertex 0\n"), 4u);
  EXPECT_EQ(parse_error_line("zeta3-complex v1\nq 2\nmode geometric\nlambda 0:1\n"), 4u);
  EXPECT_EQ(parse_error_line("zeta3-complex v1\nq 2\nq 2\n"), 3u);
  EXPECT_EQ(parse_error_line("zeta3-complex v1\nq 2\nmode presented\nlambda 0-1\n"), 4u);
  EXPECT_EQ(parse_error_line("zeta3-complex v1\nq 2\nmode geometric\nbogus 1 2\n"), 4u);
}

TEST(ComplexFile, InconsistentPresentationIsAConstructionError) {
  std::string text = serialize_complex(q2_base());
  const std::size_t at = text.find("voltage 1 0");
  text.replace(at, 11, "voltage 2 1");
  EXPECT_THROW(parse_complex(text), ConstructionError);
}
