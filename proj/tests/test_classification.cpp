#include <gtest/gtest.h>

#include <set>

#include "starring/classification.hpp"
#include "starring/ring.hpp"

using namespace starring;

namespace {

bool scan_semi_proper(const FiniteStarRing& r) {
  for (Index a = 1; a < r.order(); ++a) {
    bool all_zero = true;
    for (Index s = 0; s < r.order() && all_zero; ++s) all_zero = r.mul(r.mul(a, s), r.star(a)) == r.zero();
    if (all_zero && a != r.zero()) return false;
  }
  return true;
}

bool scan_star_ifp(const FiniteStarRing& r) {
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < r.order(); ++b) {
      if (r.mul(a, b) != r.zero()) continue;
      for (Index s = 0; s < r.order(); ++s)
        if (r.mul(r.mul(a, s), r.star(b)) != r.zero()) return false;
    }
  return true;
}

// Rickart oracle: every r({x}) equals eR for a projection e (unital rings only).
bool scan_rickart(const FiniteStarRing& r) {
  std::vector<Index> projections;
  for (Index a = 0; a < r.order(); ++a)
    if (r.mul(a, a) == a && r.star(a) == a) projections.push_back(a);
  for (Index x = 0; x < r.order(); ++x) {
    std::set<Index> ann;
    for (Index y = 0; y < r.order(); ++y)
      if (r.mul(x, y) == r.zero()) ann.insert(y);
    bool found = false;
    for (Index e : projections) {
      std::set<Index> er;
      for (Index s = 0; s < r.order(); ++s) er.insert(r.mul(e, s));
      if (er == ann) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

RingPtr null2() { return make_null_ring(2); }

}  // namespace

TEST(Classification, PropertyNames) {
  for (Property p : kAllProperties) EXPECT_EQ(property_from_string(to_string(p)), p);
  EXPECT_EQ(to_string(Property::kPqBaerStar), "pq_baer_star");
  EXPECT_FALSE(property_from_string("baer"));
}

TEST(Classification, MatrixRingOverZ3) {
  const auto report = classify(make_matrix_ring(2, make_zmod(3)));
  EXPECT_TRUE(report.holds(Property::kBaerStar));
  EXPECT_TRUE(report.holds(Property::kRickartStar));
  EXPECT_TRUE(report.holds(Property::kPqBaerStar));
  EXPECT_TRUE(report.holds(Property::kQuasiBaerStar));
  EXPECT_TRUE(report.holds(Property::kSemiProper));
  EXPECT_FALSE(report.holds(Property::kStarIfp));
  EXPECT_FALSE(report.holds(Property::kAbelian));
  EXPECT_FALSE(report.holds(Property::kCommutative));
  EXPECT_TRUE(report.holds(Property::kHasUnity));
  EXPECT_TRUE(hierarchy_violations(report).empty());

  const auto& ifp = report.at(Property::kStarIfp).witness;
  ASSERT_GE(ifp.elements.size(), 2u);
  const auto r = make_matrix_ring(2, make_zmod(3));
  EXPECT_EQ(r->mul(ifp.elements[0], ifp.elements[1]), r->zero());
}

TEST(Classification, MatrixRingOverZ6) {
  const auto report = classify(make_matrix_ring(2, make_zmod(6)));
  EXPECT_FALSE(report.holds(Property::kBaerStar));
  EXPECT_TRUE(report.holds(Property::kQuasiBaerStar));
  EXPECT_TRUE(report.holds(Property::kPqBaerStar));
  EXPECT_TRUE(report.holds(Property::kWeaklyPqBaerStar));
  EXPECT_TRUE(hierarchy_violations(report).empty());
  EXPECT_FALSE(report.at(Property::kBaerStar).witness.set.empty());
}

TEST(Classification, ZmodFamily) {
  const auto z6 = classify(make_zmod(6));
  EXPECT_TRUE(z6.holds(Property::kBaerStar));
  EXPECT_TRUE(z6.holds(Property::kQuasiBaerStar));
  EXPECT_TRUE(z6.holds(Property::kWeaklyPqBaerStar));
  EXPECT_TRUE(z6.holds(Property::kSemiProper));
  EXPECT_TRUE(z6.holds(Property::kStarIfp));
  EXPECT_TRUE(z6.holds(Property::kAbelian));

  const auto z4 = classify(make_zmod(4));
  EXPECT_FALSE(z4.holds(Property::kRickartStar));
  EXPECT_FALSE(z4.holds(Property::kReduced));
  EXPECT_EQ(z4.at(Property::kReduced).witness.elements, std::vector<Index>{2});
  EXPECT_EQ(z4.at(Property::kRickartStar).witness.elements, std::vector<Index>{2});
}

TEST(Classification, NullRing) {
  const auto report = classify(null2());
  EXPECT_FALSE(report.holds(Property::kQuasiBaerStar));
  EXPECT_FALSE(report.holds(Property::kPqBaerStar));
  EXPECT_FALSE(report.holds(Property::kWeaklyPqBaerStar));
  EXPECT_FALSE(report.holds(Property::kSemiProper));
  EXPECT_TRUE(report.holds(Property::kStarIfp));
  EXPECT_FALSE(report.holds(Property::kHasUnity));
  EXPECT_FALSE(report.holds(Property::kBaerStar));
  EXPECT_FALSE(report.at(Property::kBaerStar).witness.reason.empty());
  EXPECT_TRUE(hierarchy_violations(report).empty());
}

TEST(Classification, PositiveVerdictsCarryWitnessMaps) {
  const auto r = make_zmod(6);
  const auto report = classify(r);
  const auto& pq = report.at(Property::kPqBaerStar).witness.map;
  ASSERT_EQ(pq.size(), 6u);
  EXPECT_EQ(pq[2], (std::pair<Index, Index>{2, 3}));  // r(2R) = {0,3} = 3R
  EXPECT_EQ(pq[0], (std::pair<Index, Index>{0, 1}));
  const auto& weak = report.at(Property::kWeaklyPqBaerStar).witness.map;
  ASSERT_EQ(weak.size(), 6u);
  EXPECT_EQ(weak[2], (std::pair<Index, Index>{2, 4}));
}

TEST(Classification, ScansAgreeWithOracles) {
  for (const auto& r : {make_zmod(4), make_zmod(8), make_zmod(12), make_matrix_ring(2, make_zmod(2)),
                        make_matrix_ring(2, make_zmod(3)), make_product({make_zmod(2), make_zmod(4)}),
                        make_product({make_zmod(3), make_null_ring(2)}), null2()}) {
    const auto report = classify(r);
    EXPECT_EQ(report.holds(Property::kSemiProper), scan_semi_proper(*r)) << r->name();
    EXPECT_EQ(report.holds(Property::kStarIfp), scan_star_ifp(*r)) << r->name();
    if (r->has_unity()) EXPECT_EQ(report.holds(Property::kRickartStar), scan_rickart(*r)) << r->name();
    EXPECT_TRUE(hierarchy_violations(report).empty()) << r->name();
  }
}

TEST(Classification, CrtPairAgrees) {
  const auto a = classify(make_matrix_ring(2, make_zmod(6)));
  const auto b = classify(make_product({make_matrix_ring(2, make_zmod(2)), make_matrix_ring(2, make_zmod(3))}));
  for (Property p : kAllProperties) EXPECT_EQ(a.holds(p), b.holds(p)) << to_string(p);
}

TEST(Classification, TwoSidedIdeals) {
  RingAnalysis z12(make_zmod(12));
  // Ideals of Z_12 correspond to divisors of 12.
  EXPECT_EQ(two_sided_ideals(z12).size(), 6u);
  RingAnalysis m3(make_matrix_ring(2, make_zmod(3)));
  EXPECT_EQ(two_sided_ideals(m3).size(), 2u);  // simple ring
  RingAnalysis m6(make_matrix_ring(2, make_zmod(6)));
  EXPECT_EQ(two_sided_ideals(m6).size(), 4u);
}
