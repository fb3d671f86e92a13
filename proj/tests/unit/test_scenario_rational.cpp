#include <gtest/gtest.h>

#include <boxworld/error.hpp>
#include <boxworld/rational.hpp>
#include <boxworld/scenario.hpp>

using namespace boxworld;

TEST(Rational, ParsesFractionsDecimalsAndIntegersExactly) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" 0.25 "), Rational(1, 4));
  EXPECT_EQ(parse_rational("-0.1"), Rational(-1, 10));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(format_rational(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(format_rational(Rational(3)), "3");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational("1/0"), ShapeError);
  EXPECT_THROW(parse_rational("abc"), ShapeError);
  EXPECT_THROW(parse_rational(""), ShapeError);
  EXPECT_THROW(parse_rational("0.-5"), ShapeError);
}

TEST(Rational, BinomialMatchesPascal) {
  for (long long n = 0; n < 30; ++n)
    for (long long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(BigInt(100), 50), binomial(100, 50));
  EXPECT_EQ(binomial(60, 30).str(), "118264581564861424");
}

TEST(Rational, PrimitiveIntegerVectorKeepsTheRay) {
  auto v = primitive_integer_vector({Rational(1, 2), Rational(-3, 4), Rational(0)});
  EXPECT_EQ(v, (std::vector<BigInt>{2, -3, 0}));
}

TEST(Scenario, TableLengthIsProductOfOutputSums) {
  auto s = Scenario::bipartite(2, 2, 2, 2);
  EXPECT_EQ(s.total_entries(), 16u);
  auto mixed = Scenario::parse("2/3;2:2;1:4");
  EXPECT_EQ(mixed.total_entries(), (2u + 3u) * 4u * 4u);
  EXPECT_EQ(mixed.input_tuples(), 4u);
  EXPECT_EQ(Scenario::parse("3,2,2,2").total_entries(), 24u);
}

TEST(Scenario, TextRoundTrips) {
  for (const char* text : {"2:2;2:2", "2/3;1:4", "1:2", "3:2;2:2;2:3"}) {
    auto s = Scenario::parse(text);
    EXPECT_EQ(Scenario::parse(s.to_string()), s) << text;
  }
}

TEST(Scenario, EntryOrderIsInputsOuterOutputsInner) {
  auto s = Scenario::parse("2/3;2:2");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < s.input_tuples(); ++k) {
    auto x = s.decode_inputs(k);
    EXPECT_EQ(s.encode_inputs(x), k);
    for (std::size_t o = 0; o < s.block_size(k); ++o, ++flat) {
      auto a = s.decode_outputs(k, o);
      EXPECT_EQ(s.entry(x, a), flat);
    }
  }
  EXPECT_EQ(flat, s.total_entries());
}

TEST(Scenario, TrivialInputsAreFlagged) {
  EXPECT_TRUE(Scenario::parse("1:1").has_trivial_inputs());
  EXPECT_FALSE(Scenario::parse("2:2").has_trivial_inputs());
}

TEST(Scenario, RejectsDegenerateShapes) {
  EXPECT_THROW(Scenario({}), ShapeError);
  EXPECT_THROW(Scenario(std::vector<std::vector<std::size_t>>{{}}), ShapeError);
  EXPECT_THROW(Scenario({{2, 0}}), ShapeError);
  EXPECT_THROW(Scenario::parse("2,2,2"), ShapeError);
  EXPECT_THROW(Scenario::parse("x:2"), ShapeError);
}

TEST(Scenario, ConcatAndRestrict) {
  auto a = Scenario::parse("2:2");
  auto b = Scenario::parse("3:4");
  auto ab = a.concat(b);
  EXPECT_EQ(ab.parties(), 2u);
  const std::size_t second[] = {1};
  EXPECT_EQ(ab.restrict_to(second), b);
  const std::size_t dup[] = {0, 0};
  EXPECT_THROW(ab.restrict_to(dup), ShapeError);
}
