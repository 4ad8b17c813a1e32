#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "starring/projection.hpp"
#include "starring/ring.hpp"

using namespace starring;

namespace {

// Brute-force oracles that use nothing but the ring operations.

std::set<Index> scan_projections(const FiniteStarRing& r) {
  std::set<Index> out;
  for (Index a = 0; a < r.order(); ++a)
    if (r.mul(a, a) == a && r.star(a) == a) out.insert(a);
  return out;
}

bool scan_central(const FiniteStarRing& r, Index e) {
  for (Index a = 0; a < r.order(); ++a)
    if (r.mul(a, e) != r.mul(e, a)) return false;
  return true;
}

// {y : x r y = 0 for all r}, literally.
std::set<Index> scan_principal_right_ann(const FiniteStarRing& r, Index x) {
  std::set<Index> out;
  for (Index y = 0; y < r.order(); ++y) {
    bool ok = true;
    for (Index s = 0; s < r.order() && ok; ++s) ok = r.mul(r.mul(x, s), y) == r.zero();
    if (ok) out.insert(y);
  }
  return out;
}

std::set<Index> scan_right_ann(const FiniteStarRing& r, Index x) {
  std::set<Index> out;
  for (Index y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.zero()) out.insert(y);
  return out;
}

std::set<Index> indices(const std::vector<Element>& xs) {
  std::set<Index> out;
  for (const auto& x : xs) out.insert(x.index());
  return out;
}

std::set<Index> indices(const std::vector<Projection>& ps) {
  std::set<Index> out;
  for (const auto& p : ps) out.insert(p.element.index());
  return out;
}

std::optional<Index> scan_cover(const FiniteStarRing& r, Index x) {
  std::vector<Index> fixing;
  for (Index h : scan_projections(r))
    if (scan_central(r, h) && r.mul(h, x) == x) fixing.push_back(h);
  for (Index h : fixing)
    if (std::all_of(fixing.begin(), fixing.end(), [&](Index k) { return r.mul(h, k) == h; })) return h;
  return std::nullopt;
}

struct Fixture {
  RingPtr m3 = make_matrix_ring(2, make_zmod(3));
  RingPtr z6 = make_zmod(6);
  Element e = m3->parse_element("[[1,0],[0,0]]");
  Element f = m3->parse_element("[[2,2],[2,2]]");
  Element one = m3->element(*m3->unity());
};

}  // namespace

TEST(Projections, MatrixRingOverZ3HasSixProjections) {
  Fixture fx;
  const auto ps = all_projections(fx.m3);
  const auto one_minus = [&](const Element& x) { return fx.one - x; };
  const std::set<Index> expected = {0, fx.one.index(), fx.e.index(), fx.f.index(), one_minus(fx.e).index(),
                                    one_minus(fx.f).index()};
  EXPECT_EQ(indices(ps), expected);
  EXPECT_EQ(indices(ps), scan_projections(*fx.m3));
  EXPECT_EQ(indices(central_projections(fx.m3)), (std::set<Index>{0, fx.one.index()}));
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
    return a.element.index() < b.element.index();
  }));
}

TEST(Projections, ZmodSixIdempotents) {
  const auto z6 = make_zmod(6);
  EXPECT_EQ(indices(all_projections(z6)), (std::set<Index>{0, 1, 3, 4}));
  EXPECT_EQ(indices(central_projections(z6)), (std::set<Index>{0, 1, 3, 4}));
}

TEST(Projections, MatrixRingOverZ6Counts) {
  const auto m6 = make_matrix_ring(2, make_zmod(6));
  RingAnalysis an(m6);
  EXPECT_EQ(an.projections().size(), 24u);
  EXPECT_EQ(an.central_projections().size(), 4u);
  for (Index e : an.central_projections()) EXPECT_TRUE(scan_central(*m6, e));
}

TEST(Projections, Order) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  const auto zero = an.projection(0), one = an.projection(fx.one.index());
  const auto e = an.projection(fx.e.index()), f = an.projection(fx.f.index());
  EXPECT_TRUE(an.proj_leq(zero, f));
  EXPECT_TRUE(an.proj_leq(e, one));
  EXPECT_FALSE(an.proj_leq(e, f));
  EXPECT_FALSE(an.proj_leq(f, e));

  const auto other = all_projections(make_matrix_ring(2, make_zmod(3)));
  EXPECT_THROW(an.proj_leq(e, other.front()), Error);
}

TEST(Annihilators, ElementExamples) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  const auto all = an.right_annihilator_of_element(fx.m3->element(0));
  EXPECT_EQ(all.members.size(), 81u);
  ASSERT_TRUE(all.generator);
  EXPECT_EQ(all.generator->element, fx.one);

  const auto none = an.right_annihilator_of_element(fx.one);
  EXPECT_EQ(indices(none.members), (std::set<Index>{0}));
  ASSERT_TRUE(none.generator);
  EXPECT_TRUE(none.generator->element.is_zero());

  const auto re = an.right_annihilator_of_element(fx.e);
  EXPECT_EQ(re.members.size(), 9u);
  EXPECT_EQ(indices(re.members), scan_right_ann(*fx.m3, fx.e.index()));
  ASSERT_TRUE(re.generator);
  EXPECT_EQ(re.generator->element.to_string(), "[[0,0],[0,1]]");
  EXPECT_EQ(re.kind, Side::kRight);
}

TEST(Annihilators, PrincipalExamples) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  EXPECT_EQ(an.right_annihilator_of_principal(fx.m3->element(0)).members.size(), 81u);
  const auto pe = an.right_annihilator_of_principal(fx.e);
  EXPECT_EQ(indices(pe.members), (std::set<Index>{0}));
  ASSERT_TRUE(pe.generator);
  EXPECT_TRUE(pe.generator->element.is_zero());

  RingAnalysis z6(make_zmod(6));
  const auto two = z6.right_annihilator_of_principal(z6.element(2));
  EXPECT_EQ(indices(two.members), (std::set<Index>{0, 3}));
  ASSERT_TRUE(two.generator);
  EXPECT_EQ(two.generator->element.index(), 3u);

  const auto left = z6.left_annihilator_of_principal(z6.element(2));
  EXPECT_EQ(indices(left.members), (std::set<Index>{0, 3}));
  EXPECT_EQ(left.kind, Side::kLeft);
  EXPECT_EQ(indices(z6.left_annihilator_of_element(z6.element(1)).members), (std::set<Index>{0}));
}

TEST(Annihilators, PrincipalMatchesLiteralScan) {
  for (const auto& r : {make_zmod(12), make_matrix_ring(2, make_zmod(2)), make_null_ring(4),
                        make_product({make_zmod(4), make_null_ring(2)})}) {
    RingAnalysis an(r);
    for (Index x = 0; x < r->order(); ++x) {
      const auto got = indices(an.right_annihilator_of_principal(an.element(x)).members);
      ASSERT_EQ(got, scan_principal_right_ann(*r, x)) << r->name() << " x=" << r->format(x);
    }
  }
}

TEST(Annihilators, RightAnnihilatorsAreRightIdeals) {
  for (const auto& r : {make_matrix_ring(2, make_zmod(3)), make_zmod(12)}) {
    RingAnalysis an(r);
    for (Index x = 0; x < r->order(); ++x) {
      const auto& bits = an.right_ann(x);
      const auto& lbits = an.left_ann(x);
      for (Index a = 0; a < r->order(); ++a) {
        if (bits.test(a))
          for (Index s = 0; s < r->order(); s += 5) ASSERT_TRUE(bits.test(r->mul(a, s)));
        if (lbits.test(a))
          for (Index s = 0; s < r->order(); s += 5) ASSERT_TRUE(lbits.test(r->mul(s, a)));
      }
    }
  }
}

TEST(Annihilators, PrincipalIsIntersectionOverMultiples) {
  const auto r = make_matrix_ring(2, make_zmod(2));
  RingAnalysis an(r);
  for (Index x = 0; x < r->order(); ++x) {
    ElementBits acc(r->order());
    acc.set();
    for (Index s = 0; s < r->order(); ++s) acc &= an.right_ann(r->mul(x, s));
    EXPECT_EQ(acc, an.right_ann_principal(x));
    // Star image: {y : x R y = 0} = {y : y* R x* = 0}.
    for (Index y = 0; y < r->order(); ++y)
      EXPECT_EQ(an.right_ann_principal(x).test(y), an.right_ann_principal(r->star(y)).test(r->star(x)));
  }
}

TEST(Annihilators, OfIdeal) {
  RingAnalysis z6(make_zmod(6));
  const std::vector<Element> zero_ideal = {z6.element(0)};
  EXPECT_EQ(z6.annihilator_of_ideal(zero_ideal).members.size(), 6u);
  std::vector<Element> whole;
  for (Index a = 0; a < 6; ++a) whole.push_back(z6.element(a));
  EXPECT_EQ(indices(z6.annihilator_of_ideal(whole).members), (std::set<Index>{0}));
  const auto ideal = z6.principal_ideal(z6.element(2));
  EXPECT_EQ(indices(ideal), (std::set<Index>{0, 2, 4}));
  EXPECT_EQ(indices(z6.annihilator_of_ideal(ideal).members), (std::set<Index>{0, 3}));

  const std::vector<Element> not_ideal = {z6.element(0), z6.element(1)};
  try {
    z6.annihilator_of_ideal(not_ideal);
    FAIL() << "expected not-an-ideal";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAnIdeal);
  }
}

TEST(CentralCover, Examples) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  const auto zero = an.central_cover(fx.m3->element(0));
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->cover.element.is_zero());
  for (Index x = 1; x < fx.m3->order(); ++x) {
    const auto c = an.central_cover(an.element(x));
    ASSERT_TRUE(c);
    ASSERT_EQ(c->cover.element, fx.one);
  }
  const auto two = central_cover(make_zmod(6)->element(2));
  ASSERT_TRUE(two);
  EXPECT_EQ(two->cover.element.index(), 4u);
  EXPECT_TRUE(two->cover.is_central);
  ASSERT_EQ(two->minimality_witnesses.size(), 1u);  // h' = 0
  EXPECT_TRUE(two->minimality_witnesses[0].first.is_zero());
}

TEST(CentralCover, CertificateAndOracleAgree) {
  for (const auto& r : {make_zmod(12), make_product({make_zmod(2), make_zmod(3)}), make_null_ring(3),
                        make_product({make_zmod(2), make_null_ring(2)}), make_matrix_ring(2, make_zmod(2))}) {
    RingAnalysis an(r);
    for (Index x = 0; x < r->order(); ++x) {
      const auto cert = an.central_cover(an.element(x));
      const auto oracle = scan_cover(*r, x);
      ASSERT_EQ(cert.has_value(), oracle.has_value()) << r->name() << " " << r->format(x);
      if (!cert) continue;
      EXPECT_EQ(cert->cover.element.index(), *oracle);
      EXPECT_EQ((cert->cover.element * cert->x), cert->x);
      for (const auto& [h, hx] : cert->minimality_witnesses) {
        EXPECT_NE(hx, cert->x);
        EXPECT_EQ(h * cert->x, hx);
        EXPECT_EQ(h * cert->cover.element, h);
        EXPECT_NE(h, cert->cover.element);
      }
    }
  }
}

TEST(CentralCover, AbsentWithoutCentralFixers) {
  // In a null ring only 0 is a projection and 0 fixes only 0.
  RingAnalysis an(make_null_ring(2));
  EXPECT_FALSE(an.central_cover(an.element(1)));
  EXPECT_TRUE(an.central_cover(an.element(0)));
}

TEST(RightProjection, Examples) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  for (Index e : an.projections()) {
    const auto rp = an.right_projection(an.element(e));
    ASSERT_TRUE(rp);
    EXPECT_EQ(rp->element.index(), e);
  }
  const auto rp = an.right_projection(fx.e);
  ASSERT_TRUE(rp);
  EXPECT_EQ(rp->element, fx.e);
  const auto two = right_projection(make_zmod(6)->element(2));
  ASSERT_TRUE(two);
  EXPECT_EQ(two->element.index(), 4u);
}

TEST(RightProjection, UniqueWhenReturned) {
  for (const auto& r : {make_matrix_ring(2, make_zmod(3)), make_zmod(12), make_matrix_ring(2, make_zmod(2))}) {
    RingAnalysis an(r);
    for (Index x = 0; x < r->order(); ++x) {
      std::vector<Index> qualifying;
      for (Index e : scan_projections(*r)) {
        if (r->mul(x, e) != x) continue;
        bool same = true;
        for (Index y = 0; y < r->order() && same; ++y)
          same = (r->mul(x, y) == r->zero()) == (r->mul(e, y) == r->zero());
        if (same) qualifying.push_back(e);
      }
      const auto rp = an.right_projection_of(x);
      if (qualifying.size() == 1) {
        ASSERT_TRUE(rp);
        EXPECT_EQ(*rp, qualifying[0]);
      } else {
        EXPECT_FALSE(rp) << r->name() << " " << r->format(x);
      }
      // Left twin through the involution.
      const auto lp = an.left_projection_of(r->star(x));
      EXPECT_EQ(lp.has_value(), rp.has_value());
      if (lp && rp) EXPECT_EQ(*lp, *rp);
    }
  }
}

TEST(Supremum, Examples) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  const auto e = an.projection(fx.e.index()), f = an.projection(fx.f.index());
  const auto not_e = an.projection((fx.one - fx.e).index());
  const std::vector<Projection> single = {e};
  EXPECT_EQ(an.supremum_of_projections(single)->element, fx.e);
  const std::vector<Projection> pair = {e, not_e};
  EXPECT_EQ(an.supremum_of_projections(pair)->element, fx.one);
  const std::vector<Projection> with_zero = {an.projection(0), f};
  EXPECT_EQ(an.supremum_of_projections(with_zero)->element, fx.f);
  try {
    an.supremum_of_projections({});
    FAIL() << "expected empty-family";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kEmptyFamily);
  }
}

TEST(Supremum, IsLeastUpperBound) {
  const auto r = make_matrix_ring(2, make_zmod(2));
  RingAnalysis an(r);
  const auto& ps = an.projections();
  for (Index a : ps)
    for (Index b : ps) {
      const std::vector<Index> fam = {a, b};
      const auto sup = an.supremum_of(fam);
      std::vector<Index> uppers;
      for (Index u : ps)
        if (an.leq(a, u) && an.leq(b, u)) uppers.push_back(u);
      std::optional<Index> least;
      for (Index u : uppers)
        if (std::all_of(uppers.begin(), uppers.end(), [&](Index v) { return an.leq(u, v); })) least = u;
      EXPECT_EQ(sup, least);
    }
}

TEST(Commutant, Examples) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  std::vector<Element> everything;
  for (Index a = 0; a < 81; ++a) everything.push_back(an.element(a));
  const auto center = an.commutant(everything);
  EXPECT_EQ(center.size(), 3u);  // scalar matrices over Z_3
  const std::vector<Element> unit = {fx.one};
  EXPECT_EQ(an.commutant(unit).size(), 81u);
  const std::vector<Element> just_e = {fx.e};
  const auto diag = an.commutant(just_e);
  EXPECT_EQ(diag.size(), 9u);
  for (const auto& d : diag) {
    const std::string s = d.to_string();
    EXPECT_EQ(s[4], '0') << s;
    EXPECT_EQ(s[8], '0') << s;
  }
  // Bicommutant of {e} is itself the diagonal algebra.
  EXPECT_EQ(an.commutant(diag).size(), 9u);
}

TEST(VeryOrthogonal, Examples) {
  Fixture fx;
  RingAnalysis an(fx.m3);
  EXPECT_TRUE(an.very_orthogonal(an.projection(0), an.projection(fx.f.index())));
  EXPECT_FALSE(an.very_orthogonal(an.projection(fx.e.index()), an.projection(fx.f.index())));
  RingAnalysis z6(make_zmod(6));
  EXPECT_TRUE(z6.very_orthogonal(z6.projection(3), z6.projection(4)));
  EXPECT_FALSE(z6.very_orthogonal(z6.projection(1), z6.projection(4)));
}

TEST(VeryOrthogonal, AgreesWithZeroSandwichOnWeaklyPqRings) {
  for (const auto& r : {make_zmod(30), make_matrix_ring(2, make_zmod(6)),
                        make_product({make_matrix_ring(2, make_zmod(2)), make_zmod(3)})}) {
    RingAnalysis an(r);
    ASSERT_TRUE(an.is_weakly_pq_baer()) << r->name();
    for (Index e : an.projections())
      for (Index f : an.projections())
        EXPECT_EQ(an.very_orthogonal(an.projection(e), an.projection(f)), an.annihilates_through_ring(e, f));
  }
}

TEST(UpperBound, Examples) {
  RingAnalysis z6(make_zmod(6));
  const auto g = z6.upper_bound_central(z6.projection(3), z6.projection(4));
  EXPECT_EQ(g.bound.element.index(), 1u);
  ASSERT_TRUE(g.least_central_bound);
  EXPECT_EQ(g.least_central_bound->element.index(), 1u);
  EXPECT_TRUE(g.bound_is_least);
  const auto same = z6.upper_bound_central(z6.projection(3), z6.projection(3));
  EXPECT_EQ(same.bound.element.index(), 3u);

  Fixture fx;
  RingAnalysis an(fx.m3);
  const auto ef = an.upper_bound_central(an.projection(fx.e.index()), an.projection(fx.f.index()));
  EXPECT_EQ(ef.bound.element, fx.one);
  EXPECT_TRUE(ef.bound.is_central);

  RingAnalysis null(make_null_ring(2));
  try {
    null.upper_bound_central(null.projection(0), null.projection(0));
    FAIL() << "expected precondition-violated";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPreconditionViolated);
  }
}

TEST(UpperBound, AlwaysDominatesAndIsCentral) {
  for (const auto& r : {make_matrix_ring(2, make_zmod(6)), make_zmod(30),
                        make_product({make_matrix_ring(2, make_zmod(3)), make_zmod(2)})}) {
    RingAnalysis an(r);
    for (Index e : an.projections())
      for (Index f : an.projections()) {
        const auto ub = an.upper_bound_central(an.projection(e), an.projection(f));
        const Index g = ub.bound.element.index();
        ASSERT_TRUE(scan_central(*r, g));
        ASSERT_TRUE(an.leq(e, g) && an.leq(f, g));
        if (ub.least_central_bound) EXPECT_EQ(ub.least_leq_bound, an.leq(ub.least_central_bound->element.index(), g));
      }
  }
}

TEST(Analysis, ParallelMatchesSerial) {
  const auto r = make_matrix_ring(2, make_zmod(6));
  RingAnalysis serial(r, {.jobs = 1});
  RingAnalysis parallel(r, {.jobs = 4});
  EXPECT_EQ(serial.projections(), parallel.projections());
  for (Index x = 0; x < r->order(); x += 11) {
    EXPECT_EQ(serial.right_ann_principal(x), parallel.right_ann_principal(x));
    EXPECT_EQ(serial.cover(x), parallel.cover(x));
  }
}

TEST(Analysis, GeneratedIdealReadingDiffersOnlyWithoutUnity) {
  const auto unital = make_zmod(12);
  RingAnalysis a(unital), b(unital, {.principal = PrincipalIdealReading::kGeneratedRightIdeal});
  for (Index x = 0; x < 12; ++x) EXPECT_EQ(a.right_ann_principal(x), b.right_ann_principal(x));
  // In 2Z_8, 2R = {0,4} is killed by every element, but 2 itself is not.
  const auto even = make_subring(make_zmod(8), {0, 2, 4, 6}, "2Z_8");
  RingAnalysis c(even), d(even, {.principal = PrincipalIdealReading::kGeneratedRightIdeal});
  const Index two = even->parse("2");
  EXPECT_EQ(c.right_ann_principal(two).count(), 4u);
  EXPECT_EQ(d.right_ann_principal(two).count(), 2u);
}
