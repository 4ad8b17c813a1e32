#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "starring/projection.hpp"
#include "starring/ring.hpp"

using namespace starring;

namespace {

// Independent oracle: smallest k >= 1 with k * 1 = 0, by repeated addition.
std::uint64_t scan_characteristic(const FiniteStarRing& r) {
  Index acc = *r.unity();
  std::uint64_t k = 1;
  while (acc != r.zero()) {
    acc = r.add(acc, *r.unity());
    ++k;
  }
  return k;
}

}  // namespace

TEST(CoreAlgebra, ZmodBasics) {
  const auto z6 = make_zmod(6);
  EXPECT_EQ(z6->order(), 6u);
  ASSERT_TRUE(z6->has_unity());
  EXPECT_EQ(*z6->unity(), 1u);
  EXPECT_EQ(z6->characteristic(), 6u);

  const auto z2 = make_zmod(2);
  EXPECT_EQ(z2->order(), 2u);
  EXPECT_EQ(z2->star(1), 1u);

  const auto z9 = make_zmod(9);
  EXPECT_EQ(z9->characteristic(), scan_characteristic(*z9));
  EXPECT_EQ(z9->characteristic(), 9u);
}

TEST(CoreAlgebra, ZmodRejectsSmallModulus) {
  try {
    make_zmod(1);
    FAIL() << "expected invalid-parameter";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
  }
  EXPECT_THROW(make_zmod(0), Error);
  EXPECT_THROW(make_gf(6), Error);
}

TEST(CoreAlgebra, MatrixRingOrders) {
  EXPECT_EQ(make_matrix_ring(2, make_zmod(3))->order(), 81u);
  EXPECT_EQ(make_matrix_ring(2, make_zmod(6))->order(), 1296u);
  const auto m = make_matrix_ring(2, make_zmod(3));
  EXPECT_EQ(m->format(*m->unity()), "[[1,0],[0,1]]");
  EXPECT_EQ(m->format(m->zero()), "[[0,0],[0,0]]");
}

TEST(CoreAlgebra, MatrixInvolutionIsTranspose) {
  const auto m = make_matrix_ring(2, make_zmod(3));
  const auto x = m->parse_element("[[1,2],[0,1]]");
  EXPECT_EQ(x.star().to_string(), "[[1,0],[2,1]]");
  const auto y = m->parse_element("[[0,1],[1,2]]");
  EXPECT_EQ((x * y).star(), y.star() * x.star());
}

TEST(CoreAlgebra, MatrixSizeLimitNamesBound) {
  try {
    make_matrix_ring(2, make_zmod(12));
    FAIL() << "expected size-limit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSizeLimit);
    EXPECT_NE(std::string(e.what()).find("20000"), std::string::npos);
  }
  EXPECT_NO_THROW(make_matrix_ring(2, make_zmod(12), 30000));
}

TEST(CoreAlgebra, MatrixOfNonUnitalBaseRejected) {
  EXPECT_THROW(make_matrix_ring(2, make_null_ring(2)), Error);
}

TEST(CoreAlgebra, OneByOneMatricesMatchBase) {
  for (const auto& base : {make_zmod(6), make_matrix_ring(2, make_zmod(2))}) {
    const auto m1 = make_matrix_ring(1, base);
    ASSERT_EQ(m1->order(), base->order());
    // The entry map is a -> [[a]]; with one cell the coordinates coincide.
    for (Index a = 0; a < base->order(); ++a) {
      EXPECT_EQ(m1->format(a), "[" + std::string("[") + base->format(a) + "]]");
      EXPECT_EQ(m1->star(a), base->star(a));
      for (Index b = 0; b < base->order(); ++b) {
        ASSERT_EQ(m1->add(a, b), base->add(a, b));
        ASSERT_EQ(m1->mul(a, b), base->mul(a, b));
      }
    }
  }
}

TEST(CoreAlgebra, ProductBasics) {
  const auto p = make_product({make_zmod(2), make_zmod(3)});
  EXPECT_EQ(p->order(), 6u);
  ASSERT_TRUE(p->has_unity());
  EXPECT_EQ(p->format(*p->unity()), "(1; 1)");
  EXPECT_EQ(p->characteristic(), 6u);

  const auto big = make_product({make_zmod(6), make_matrix_ring(2, make_zmod(3))});
  EXPECT_EQ(big->order(), 6u * 81u);

  const auto mixed = make_product({make_zmod(2), make_null_ring(2)});
  EXPECT_FALSE(mixed->has_unity());

  EXPECT_THROW(make_product({make_zmod(2)}), Error);
  EXPECT_THROW(make_product({make_zmod(200), make_zmod(200)}), Error);
}

TEST(CoreAlgebra, CrtProjectionCountsAgree) {
  const auto m6 = make_matrix_ring(2, make_zmod(6));
  const auto split = make_product({make_matrix_ring(2, make_zmod(2)), make_matrix_ring(2, make_zmod(3))});
  const auto p6 = all_projections(m6);
  const auto ps = all_projections(split);
  EXPECT_EQ(p6.size(), ps.size());
  EXPECT_EQ(p6.size(), 24u);
}

TEST(CoreAlgebra, ElementsEnumerateCarrierOnce) {
  for (const auto& r : {make_zmod(6), make_matrix_ring(2, make_zmod(3)),
                        make_product({make_zmod(2), make_zmod(3)})}) {
    std::vector<Index> seen;
    for (const Element& e : r->elements()) seen.push_back(e.index());
    EXPECT_EQ(seen.size(), r->order());
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  }
  EXPECT_EQ(std::ranges::distance(make_matrix_ring(2, make_zmod(3))->elements()), 81);
}

TEST(CoreAlgebra, LiteralsRoundTrip) {
  const auto p = make_product({make_zmod(6), make_matrix_ring(2, make_zmod(3))});
  for (Index a = 0; a < p->order(); a += 7) EXPECT_EQ(p->parse(p->format(a)), a);
  EXPECT_EQ(p->format(p->parse("( 5 ; [[1, 2], [0, 1]] )")), "(5; [[1,2],[0,1]])");
  EXPECT_THROW(p->parse("(6; [[0,0],[0,0]])"), Error);
  EXPECT_THROW(p->parse("(1; [[0,0],[0,0]]) junk"), Error);
  EXPECT_THROW(make_zmod(6)->parse("[[1]]"), Error);
}

TEST(CoreAlgebra, ElementsOfDifferentRingsDoNotMix) {
  const auto a = make_zmod(6)->element(1);
  const auto b = make_zmod(6)->element(1);
  try {
    (void)(a + b);
    FAIL() << "expected ring-mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRingMismatch);
  }
  EXPECT_FALSE(a == b);
}

TEST(Validation, ExhaustiveOnCatalogRings) {
  for (const auto& r : {make_zmod(2), make_zmod(12), make_gf(7), make_matrix_ring(2, make_zmod(3)),
                        make_matrix_ring(2, make_zmod(2)), make_product({make_zmod(2), make_zmod(3)}),
                        make_null_ring(4)}) {
    const auto report = validate_axioms(*r, ValidationMode::full());
    EXPECT_TRUE(report.passed()) << r->name();
  }
}

TEST(Validation, SampledOnLargeRing) {
  const auto m = make_matrix_ring(2, make_zmod(6));
  const auto report = validate_axioms(*m, ValidationMode::sampled(100000));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.result(Axiom::kMulAssociative).checked, 100000u);
  EXPECT_EQ(ValidationMode::automatic(m->order()).exhaustive, true);
  EXPECT_EQ(ValidationMode::automatic(2001).exhaustive, false);
  EXPECT_EQ(ValidationMode::automatic(2001).samples, kDefaultSampleCount);
  EXPECT_EQ(ValidationMode::automatic(2001).seed, 0xA15Eu);
}

TEST(Validation, CorruptedMultiplicationReportsTriple) {
  auto tables = cayley_tables(*make_zmod(3));
  tables.mul[1 * 3 + 1] = 2;  // 1 * 1 = 2
  const auto broken = make_table_ring("broken", tables);
  const auto report = validate_axioms(*broken, ValidationMode::full());
  ASSERT_FALSE(report.passed());
  const auto& assoc = report.result(Axiom::kMulAssociative);
  ASSERT_FALSE(assoc.passed);
  ASSERT_EQ(assoc.counterexample.size(), 3u);
  const Index a = assoc.counterexample[0], b = assoc.counterexample[1], c = assoc.counterexample[2];
  EXPECT_NE(broken->mul(broken->mul(a, b), c), broken->mul(a, broken->mul(b, c)));
}

TEST(Validation, BrokenInvolutionDetected) {
  auto tables = cayley_tables(*make_matrix_ring(2, make_zmod(2)));
  for (Index a = 0; a < tables.order; ++a) tables.star[a] = a;  // identity is not anti-multiplicative here
  const auto broken = make_table_ring("no-transpose", tables);
  const auto report = validate_axioms(*broken, ValidationMode::full());
  EXPECT_FALSE(report.result(Axiom::kStarAntiMultiplicative).passed);
  EXPECT_TRUE(report.result(Axiom::kStarInvolutive).passed);
}

TEST(Validation, SubringMustBeClosed) {
  const auto z6 = make_zmod(6);
  EXPECT_NO_THROW(make_subring(z6, {0, 2, 4}, "2Z_6"));
  EXPECT_THROW(make_subring(z6, {0, 1}, "bad"), Error);
  const auto ideal = make_subring(z6, {0, 2, 4}, "2Z_6");
  ASSERT_TRUE(ideal->has_unity());
  EXPECT_EQ(ideal->format(*ideal->unity()), "4");
}

TEST(Validation, CompleteModeAgreesWithLiteralScan) {
  for (const auto& r : {make_zmod(12), make_matrix_ring(2, make_zmod(2)), make_matrix_ring(2, make_zmod(3)),
                        make_product({make_zmod(2), make_null_ring(3)})}) {
    const auto literal = validate_axioms(*r, ValidationMode::full());
    const auto reduced = validate_axioms(*r, ValidationMode::complete());
    EXPECT_TRUE(literal.passed());
    EXPECT_TRUE(reduced.passed());
    EXPECT_LT(reduced.result(Axiom::kMulAssociative).checked, literal.result(Axiom::kMulAssociative).checked);
  }
}

TEST(Validation, CompleteModeCatchesFaults) {
  // Each corruption breaks a different law; the reduced scan must see it.
  const auto base = cayley_tables(*make_matrix_ring(2, make_zmod(2)));
  auto assoc = base;
  assoc.mul[5 * 16 + 6] = assoc.mul[6 * 16 + 5];
  auto star = base;
  for (Index a = 0; a < star.order; ++a) star.star[a] = a;
  auto dist = base;
  dist.mul[3 * 16 + 3] = 0;
  for (const auto& tables : {assoc, star, dist}) {
    const auto ring = make_table_ring("faulty", tables);
    const auto literal = validate_axioms(*ring, ValidationMode::full());
    const auto reduced = validate_axioms(*ring, ValidationMode::complete());
    ASSERT_FALSE(literal.passed());
    EXPECT_FALSE(reduced.passed());
    for (const auto& r : reduced.axioms) {
      if (r.passed) continue;
      EXPECT_FALSE(literal.result(r.axiom).passed) << to_string(r.axiom);
    }
  }
}
