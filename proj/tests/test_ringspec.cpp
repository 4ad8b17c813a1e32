#include <gtest/gtest.h>

#include "starring/ringspec.hpp"

using namespace starring;

namespace {

SpecError parse_error(std::string_view src) {
  try {
    parse_ringspec(src);
  } catch (const SpecError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << src;
  return SpecError(ErrorKind::kSyntax, 0, 0, {}, "");
}

}  // namespace

TEST(RingSpec, ParsesEveryForm) {
  const auto defs = parse_ringspec(
      "# catalog\n"
      "ring A = zmod(6)\n"
      "ring F = gf(3)   # field\n"
      "ring M = mat(2, A)\n"
      "ring P = product(A, zmod(4), mat(2, gf(2)))\n"
      "ring U = unitify(mat(2, zmod(3)), gf(3))\n");
  ASSERT_EQ(defs.size(), 5u);
  EXPECT_EQ(defs[0].name, "A");
  EXPECT_EQ(defs[2].line, 4u);
  EXPECT_EQ(*defs[2].expr, *RingExpr::mat(2, RingExpr::named("A")));
  EXPECT_EQ(to_string(*defs[3].expr), "product(A, zmod(4), mat(2, gf(2)))");
  EXPECT_EQ(to_string(*defs[4].expr), "unitify(mat(2, zmod(3)), gf(3))");
}

TEST(RingSpec, FormatRoundTrips) {
  const std::string src =
      "ring a_1 = zmod(12)\nring b = product(a_1, gf(5))\nring c = unitify(mat(2, b), gf(5))\n";
  const auto defs = parse_ringspec(src);
  EXPECT_EQ(format_ringspec(defs), src);
  const auto again = parse_ringspec(format_ringspec(defs));
  ASSERT_EQ(again.size(), defs.size());
  for (std::size_t i = 0; i < defs.size(); ++i) {
    EXPECT_EQ(again[i].name, defs[i].name);
    EXPECT_EQ(*again[i].expr, *defs[i].expr);
  }
  EXPECT_TRUE(parse_ringspec("  # nothing\n\n").empty());
}

TEST(RingSpec, SyntaxErrorsCarryPositionAndExpectedTokens) {
  auto e = parse_error("ring A = zmod(6)\nring B = mat(2 A)\n");
  EXPECT_EQ(e.kind(), ErrorKind::kSyntax);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 16u);
  EXPECT_EQ(e.expected(), std::vector<std::string>{"','"});
  EXPECT_NE(std::string(e.what()).find("line 2, column 16"), std::string::npos);

  e = parse_error("ring A = \n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.expected().size(), 6u);

  e = parse_error("ring A = zmod(6) extra");
  EXPECT_EQ(e.column(), 18u);

  e = parse_error("ring A = product(zmod(2))");
  EXPECT_EQ(e.kind(), ErrorKind::kSyntax);

  e = parse_error("ring gf = zmod(2)");
  EXPECT_EQ(e.expected(), std::vector<std::string>{"ring name"});

  e = parse_error("ring A = zmod(6) ; ");
  EXPECT_EQ(e.kind(), ErrorKind::kSyntax);
  EXPECT_EQ(e.column(), 18u);
}

TEST(RingSpec, SemanticErrors) {
  auto e = parse_error("ring A = zmod(2)\nring A = zmod(3)\n");
  EXPECT_EQ(e.kind(), ErrorKind::kDuplicateName);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 6u);

  e = parse_error("ring A = mat(2, B)\nring B = zmod(3)\n");
  EXPECT_EQ(e.kind(), ErrorKind::kUnknownIdentifier);
  EXPECT_EQ(e.column(), 17u);

  e = parse_error("ring A = mat(2, A)");
  EXPECT_EQ(e.kind(), ErrorKind::kUnknownIdentifier);

  e = parse_error("ring A = gf(4)");
  EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
  EXPECT_EQ(e.column(), 13u);

  EXPECT_EQ(parse_error("ring A = zmod(1)").kind(), ErrorKind::kInvalidParameter);
  EXPECT_EQ(parse_error("ring A = zmod(0)").kind(), ErrorKind::kInvalidParameter);
  EXPECT_EQ(parse_error("ring A = mat(0, zmod(2))").kind(), ErrorKind::kInvalidParameter);
  EXPECT_EQ(parse_error("ring A = zmod(99999999999999999999999)").kind(), ErrorKind::kInvalidParameter);

  e = parse_error("ring K = gf(3)\nring A = unitify(zmod(3), K)");
  EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedScalars);
  EXPECT_EQ(parse_error("ring A = unitify(zmod(3), zmod(3))").kind(), ErrorKind::kUnsupportedScalars);
}

TEST(RingSpec, SingleExpressionLeavesNamesOpen) {
  const auto e = parse_ring_expr("mat(2, Foo)");
  EXPECT_EQ(*e, *RingExpr::mat(2, RingExpr::named("Foo")));
  EXPECT_THROW(parse_ring_expr("zmod(3) zmod(3)"), SpecError);
  EXPECT_THROW(build_ring(*e), Error);
}

TEST(RingEnvironment, BuildsAndMemoizes) {
  RingEnvironment env(parse_ringspec(
      "ring A = zmod(6)\nring M = mat(2, A)\nring U = unitify(zmod(3), gf(3))\nring P = product(U, A)\n"));
  EXPECT_TRUE(env.contains("M"));
  EXPECT_FALSE(env.contains("Q"));
  const auto& m = env.get("M");
  EXPECT_EQ(m.ring->order(), 1296u);
  EXPECT_FALSE(m.extension);
  EXPECT_EQ(env.get("M").ring.get(), m.ring.get());
  const auto& u = env.get("U");
  ASSERT_TRUE(u.extension);
  EXPECT_EQ(u.ring->order(), 9u);
  EXPECT_EQ(u.extension->base()->order(), 3u);
  EXPECT_EQ(env.get("P").ring->order(), 54u);
  EXPECT_THROW(env.get("Q"), Error);
  EXPECT_EQ(env.build(*parse_ring_expr("product(A, gf(2))")).ring->order(), 12u);
}

TEST(RingEnvironment, BuildErrors) {
  try {
    build_ring(*parse_ring_expr("unitify(zmod(6), gf(3))"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedScalars);
  }
  try {
    build_ring(*parse_ring_expr("mat(3, zmod(100))"), 20000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSizeLimit);
  }
}
