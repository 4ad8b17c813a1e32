#include "starring/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "starring/parallel.hpp"

namespace starring {

// ---------------------------------------------------------------------------
// Subject

struct Subject::State {
  SubjectKind kind = SubjectKind::kRing;
  std::string name;
  std::optional<UnitalExtension> extension;
  std::unique_ptr<RingAnalysis> analysis;
  std::unique_ptr<RingAnalysis> base;
  std::once_flag report_once;
  std::once_flag base_report_once;
  ClassificationReport report;
  ClassificationReport base_report;
};

Subject Subject::ring(RingPtr ring, std::string name, AnalysisOptions options) {
  if (!ring) throw Error(ErrorKind::kInvalidParameter, "subject without a ring");
  auto s = std::make_shared<State>();
  s->name = name.empty() ? ring->name() : std::move(name);
  s->analysis = std::make_unique<RingAnalysis>(std::move(ring), options);
  return Subject(std::move(s));
}

Subject Subject::action(UnitalExtension extension, std::string name, AnalysisOptions options) {
  auto s = std::make_shared<State>();
  s->kind = SubjectKind::kAction;
  s->name = name.empty() ? extension.ring()->name() : std::move(name);
  s->analysis = std::make_unique<RingAnalysis>(extension.ring(), options);
  s->base = std::make_unique<RingAnalysis>(extension.base(), options);
  s->extension.emplace(std::move(extension));
  return Subject(std::move(s));
}

Subject Subject::from(const BuiltRing& built, std::string name, AnalysisOptions options) {
  if (built.extension) return action(*built.extension, std::move(name), options);
  return ring(built.ring, std::move(name), options);
}

SubjectKind Subject::kind() const { return state_->kind; }
const std::string& Subject::name() const { return state_->name; }
const RingAnalysis& Subject::analysis() const { return *state_->analysis; }

const ClassificationReport& Subject::report() const {
  std::call_once(state_->report_once, [&] { state_->report = classify(*state_->analysis); });
  return state_->report;
}

const RingAnalysis& Subject::base_analysis() const {
  if (!state_->base) {
    throw Error(ErrorKind::kSubjectKindMismatch, state_->name + " is a ring, not a scalar action");
  }
  return *state_->base;
}

const ClassificationReport& Subject::base_report() const {
  const auto& base = base_analysis();
  std::call_once(state_->base_report_once, [&] { state_->base_report = classify(base); });
  return state_->base_report;
}

const UnitalExtension& Subject::extension() const {
  if (!state_->extension) {
    throw Error(ErrorKind::kSubjectKindMismatch, state_->name + " is a ring, not a scalar action");
  }
  return *state_->extension;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

struct BitsHash {
  std::size_t operator()(const ElementBits& b) const { return boost::hash_value(b); }
};

struct Outcome {
  bool applicable = true;
  bool passed = true;
  std::string detail;
  std::vector<std::string> counterexample;
};

Outcome vacuous(const std::string& hypothesis) { return {false, true, "hypothesis fails: " + hypothesis, {}}; }
Outcome holds(std::string detail) { return {true, true, std::move(detail), {}}; }

Outcome fails(const FiniteStarRing& ring, std::string detail, std::initializer_list<Index> elements) {
  Outcome o{true, false, std::move(detail), {}};
  for (const Index e : elements) o.counterexample.push_back(ring.format(e));
  return o;
}

constexpr Index kNoIndex = static_cast<Index>(-1);

Index cover_or_none(const RingAnalysis& an, Index x) { return an.cover(x).value_or(kNoIndex); }

std::string count_of(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

std::optional<Outcome> require_pq(const Subject& s) {
  const auto& v = s.report().at(Property::kPqBaerStar);
  if (!v.holds) return vacuous("not p.q.-Baer (" + v.witness.reason + ")");
  return std::nullopt;
}

std::optional<Outcome> require_weakly_pq(const Subject& s) {
  const auto& v = s.report().at(Property::kWeaklyPqBaerStar);
  if (!v.holds) return vacuous("not weakly p.q.-Baer (" + v.witness.reason + ")");
  return std::nullopt;
}

/// Some central projection c with r(xR) = r(cR).
bool central_principal_match(const RingAnalysis& an, Index x) {
  const auto& target = an.right_ann_principal(x);
  return std::any_of(an.central_projections().begin(), an.central_projections().end(),
                     [&](Index c) { return an.right_ann_principal(c) == target; });
}

Outcome equivalence(const FiniteStarRing& ring, const char* lhs_name, bool lhs, const char* rhs_name,
                    bool rhs, std::optional<Index> rhs_witness) {
  const std::string both = std::string(lhs_name) + " = " + (lhs ? "true" : "false") + ", " + rhs_name +
                           " = " + (rhs ? "true" : "false");
  if (lhs == rhs) return holds(both);
  Outcome o = fails(ring, both, {});
  if (rhs_witness) o.counterexample.push_back(ring.format(*rhs_witness));
  return o;
}

// -- ring level ---------------------------------------------------------------

Outcome check_pr1(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  if (!ring.has_unity()) return fails(ring, "p.q.-Baer ring without unity", {});
  if (!s.report().holds(Property::kSemiProper)) {
    return fails(ring, "involution is not semi-proper", {s.report().at(Property::kSemiProper).witness.elements.front()});
  }
  const auto e = an.right_generator(an.right_ann_principal(ring.zero()));
  if (e != ring.unity()) return fails(ring, "r(0R) = R is not generated by the unity", {});
  return holds("unity " + ring.format(*ring.unity()) + " generates r(0R) = R; involution semi-proper");
}

Outcome check_rem01(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  std::set<Index> generators;
  for (Index z = 0; z < an.ring().order(); ++z) {
    const auto k = an.right_generator(an.right_ann_principal(z));
    if (!k) return fails(an.ring(), "r(zR) has no generating projection", {z});
    if (!an.is_central(*k)) return fails(an.ring(), "generator of r(zR) is not central", {z, *k});
    generators.insert(*k);
  }
  return holds(count_of(generators.size(), "distinct generators of r(zR), all central"));
}

Outcome check_th002(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  const Index one = *ring.unity();
  for (Index x = 0; x < ring.order(); ++x) {
    const auto e = an.cover(x);
    if (!e) return fails(ring, "no central cover", {x});
    const Index g = ring.sub(one, *e);
    const auto& rx = an.right_ann_principal(x);
    const ElementBits* sets[] = {&an.right_ann_principal(*e), &an.left_ann_principal(x),
                                 &an.left_ann_principal(*e), &an.right_ideal_of(g),
                                 &an.left_ideal_of(g), &an.right_ann(*e)};
    static constexpr const char* kNames[] = {"r(eR)", "l(Rx)", "l(Re)", "(1-e)R", "R(1-e)", "{y : ey = 0}"};
    for (std::size_t i = 0; i < std::size(sets); ++i) {
      if (*sets[i] != rx) {
        const auto y = static_cast<Index>((*sets[i] ^ rx).find_first());
        return fails(ring, std::string("r(xR) differs from ") + kNames[i], {x, *e, y});
      }
    }
  }
  return holds("r(xR) = r(eR) = l(Rx) = l(Re) = (1-e)R = R(1-e) for e = C(x), every x");
}

Outcome check_ex01(const Subject& s) {
  const auto& rep = s.report();
  if (!rep.holds(Property::kRickartStar)) return vacuous("not Rickart");
  if (!rep.holds(Property::kPqBaerStar)) return vacuous("not p.q.-Baer");
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  if (an.central_projections().size() == an.projections().size()) {
    return vacuous("every projection is central");
  }
  ElementBits covers(ring.order());
  for (Index y = 0; y < ring.order(); ++y) covers.set(*an.cover(y));
  std::optional<Index> rp_witness;
  std::optional<Index> ann_witness;
  for (Index x = 0; x < ring.order() && !(rp_witness && ann_witness); ++x) {
    const auto rp = an.right_projection_of(x);
    if (!rp_witness && rp && !covers.test(*rp)) rp_witness = x;
    if (!ann_witness && an.right_ann(x) != an.right_ann_principal(x)) ann_witness = x;
  }
  if (!rp_witness) return fails(ring, "every right projection is a central cover", {});
  if (!ann_witness) return fails(ring, "r(x) = r(xR) for every x", {});
  return holds("RP(" + ring.format(*rp_witness) + ") = " + ring.format(*an.right_projection_of(*rp_witness)) +
               " is no central cover; r(x) != r(xR) at x = " + ring.format(*ann_witness));
}

Outcome check_th1(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  for (Index x = 0; x < ring.order(); ++x) {
    if (an.cover(x) != an.cover(ring.star(x))) return fails(ring, "C(x) != C(x*)", {x});
  }
  for (Index x = 0; x < ring.order(); ++x) {
    const Index cx = *an.cover(x);
    const auto& rx = an.right_ann_principal(x);
    for (Index y = 0; y < ring.order(); ++y) {
      if (rx.test(y) != (ring.mul(cx, *an.cover(y)) == ring.zero())) {
        return fails(ring, "xRy = 0 disagrees with C(x)C(y) = 0", {x, y});
      }
    }
  }
  return holds("C(x) = C(x*) and (xRy = 0 <=> C(x)C(y) = 0) for all x, y");
}

Outcome check_cr3(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  if (an.central_projections().size() != 2) {
    return vacuous(count_of(an.central_projections().size(), "central projections, not exactly {0, 1}"));
  }
  for (Index x = 0; x < ring.order(); ++x) {
    const auto& rx = an.right_ann_principal(x);
    for (Index y = 0; y < ring.order(); ++y) {
      if (rx.test(y) != (x == ring.zero() || y == ring.zero())) {
        return fails(ring, "xRy = 0 disagrees with (x = 0 or y = 0)", {x, y});
      }
    }
  }
  return holds("xRy = 0 <=> x = 0 or y = 0 for all x, y");
}

Outcome check_cor_cxy(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  for (Index x = 0; x < ring.order(); ++x) {
    const Index cx = *an.cover(x);
    for (Index y = 0; y < ring.order(); ++y) {
      if (*an.cover(ring.mul(x, y)) != ring.mul(cx, *an.cover(y))) {
        return vacuous("C(xy) != C(x)C(y) at x = " + ring.format(x) + ", y = " + ring.format(y));
      }
    }
  }
  if (!s.report().holds(Property::kRickartStar)) {
    return fails(ring, "not Rickart", {s.report().at(Property::kRickartStar).witness.elements.front()});
  }
  for (Index x = 0; x < ring.order(); ++x) {
    if (an.right_projection_of(x) != an.cover(x)) return fails(ring, "RP(x) != C(x)", {x});
  }
  return holds("Rickart, and RP(x) = C(x) for every x");
}

constexpr std::size_t kFamilyCap = 10000;

Outcome check_pr4(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  const auto& p = an.projections();
  std::size_t families = 0;
  auto check = [&](std::initializer_list<Index> family) -> std::optional<Outcome> {
    const auto sup = an.supremum_of(std::span(family.begin(), family.size()));
    if (!sup) return std::nullopt;
    ++families;
    ElementBits meet = an.left_ann_principal(*family.begin());
    for (const Index e : family) meet &= an.left_ann_principal(e);
    const auto& target = an.left_ann_principal(*sup);
    if (meet != target) {
      const auto x = static_cast<Index>((meet ^ target).find_first());
      Outcome o = fails(ring, "xRe = 0 disagrees with xRe_i = 0 for all i", {x, *sup});
      for (const Index e : family) o.counterexample.push_back(ring.format(e));
      return o;
    }
    return std::nullopt;
  };
  for (std::size_t i = 0; i < p.size() && families < kFamilyCap; ++i) {
    for (std::size_t j = i + 1; j < p.size() && families < kFamilyCap; ++j) {
      if (auto o = check({p[i], p[j]})) return *o;
    }
  }
  for (std::size_t i = 0; i < p.size() && families < kFamilyCap; ++i) {
    for (std::size_t j = i + 1; j < p.size() && families < kFamilyCap; ++j) {
      for (std::size_t k = j + 1; k < p.size() && families < kFamilyCap; ++k) {
        if (auto o = check({p[i], p[j], p[k]})) return *o;
      }
    }
  }
  return holds(count_of(families, "families of 2 or 3 projections with a supremum checked"));
}

Outcome check_th7(const Subject& s) {
  if (auto v = require_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  // B = {a, a*}'' for every a, and the center. S' is an additive group and
  // x s = s x is additive in s, so S'' only needs generators of S'.
  std::unordered_set<ElementBits, BitsHash> commutants;
  std::unordered_set<ElementBits, BitsHash> seen;
  std::vector<ElementBits> algebras;
  auto add_algebra = [&](const ElementBits& first) {
    if (!commutants.insert(first).second) return;
    AdditiveSpan span(ring);
    for (auto m = first.find_first(); m != ElementBits::npos; m = first.find_next(m)) {
      span.insert(static_cast<Index>(m));
    }
    ElementBits b = commutant(ring, span.generators());
    if (seen.insert(b).second) algebras.push_back(std::move(b));
  };
  for (Index a = 0; a < ring.order(); ++a) {
    const Index seeds[] = {a, ring.star(a)};
    add_algebra(commutant(ring, seeds));
  }
  {
    ElementBits center = commutant(ring, an.ring_generators());
    if (seen.insert(center).second) algebras.push_back(std::move(center));
  }
  std::size_t families = 0;
  for (const auto& b : algebras) {
    std::vector<Index> central;
    for (const Index c : an.central_projections()) {
      if (b.test(c)) central.push_back(c);
    }
    const std::size_t k = central.size();
    const std::uint64_t subsets = k < 14 ? (std::uint64_t{1} << k) : 0;
    auto check = [&](const std::vector<Index>& family) -> std::optional<Outcome> {
      const auto sup = an.supremum_of(family);
      if (!sup) return std::nullopt;
      ++families;
      if (!b.test(*sup)) {
        Outcome o = fails(ring, "supremum of central projections of B lies outside B", {*sup});
        for (const Index e : family) o.counterexample.push_back(ring.format(e));
        return o;
      }
      return std::nullopt;
    };
    std::vector<Index> family;
    if (subsets) {
      for (std::uint64_t mask = 1; mask < subsets && families < kFamilyCap; ++mask) {
        family.clear();
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) family.push_back(central[i]);
        if (auto o = check(family)) return *o;
      }
    } else {
      for (std::size_t i = 0; i < k && families < kFamilyCap; ++i)
        for (std::size_t j = i + 1; j < k && families < kFamilyCap; ++j) {
          if (auto o = check({central[i], central[j]})) return *o;
          for (std::size_t l = j + 1; l < k && families < kFamilyCap; ++l)
            if (auto o = check({central[i], central[j], central[l]})) return *o;
        }
    }
  }
  return holds(count_of(algebras.size(), "bicommutant-closed *-subrings, ") +
               count_of(families, "families with a supremum inside them"));
}

Outcome check_pr301(const Subject& s) {
  const auto& an = s.analysis();
  std::optional<Index> miss;
  for (Index x = 0; x < an.ring().order() && !miss; ++x) {
    if (!central_principal_match(an, x)) miss = x;
  }
  const bool rhs = an.ring().has_unity() && !miss;
  return equivalence(an.ring(), "pq_baer_star", s.report().holds(Property::kPqBaerStar),
                     "unity and r(xR) = r(eR) for central e", rhs, miss);
}

Outcome check_ex_null(const Subject& s) {
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  if (ring.order() < 2) return vacuous("R = 0");
  const auto& gens = an.ring_generators();
  for (const Index g : gens)
    for (const Index h : gens)
      if (ring.mul(g, h) != ring.zero()) return vacuous("R^2 != 0");
  if (an.projections() != std::vector<Index>{ring.zero()}) return fails(ring, "a nonzero projection exists", {});
  for (Index x = 0; x < ring.order(); ++x) {
    if (an.right_ann_principal(x).count() != ring.order()) return fails(ring, "r(xR) != R", {x});
  }
  const auto& rep = s.report();
  if (rep.holds(Property::kPqBaerStar)) return fails(ring, "classified p.q.-Baer", {});
  if (rep.holds(Property::kWeaklyPqBaerStar)) return fails(ring, "classified weakly p.q.-Baer", {});
  const Index x = ring.order() > 1 ? 1 : 0;
  return holds("0 is the only projection and r(xR) = R for all x, but x 0 != x at x = " + ring.format(x));
}

std::optional<std::pair<std::uint32_t, std::uint64_t>> zmod_shape(const RingExprPtr& e) {
  if (!e) return std::nullopt;
  auto modulus = [](const RingExpr& x) -> std::optional<std::uint64_t> {
    if (const auto* z = std::get_if<expr::Zmod>(&x.node)) return z->modulus;
    if (const auto* g = std::get_if<expr::GF>(&x.node)) return g->prime;
    return std::nullopt;
  };
  if (const auto m = modulus(*e)) return std::pair<std::uint32_t, std::uint64_t>{1, *m};
  if (const auto* mat = std::get_if<expr::Mat>(&e->node)) {
    if (const auto m = modulus(*mat->base)) return std::pair<std::uint32_t, std::uint64_t>{mat->size, *m};
  }
  return std::nullopt;
}

Outcome check_c031(const Subject& s) {
  const auto& ring = s.analysis().ring();
  const auto shape = zmod_shape(ring.expr());
  if (!shape) return vacuous("not Z_m or M_n(Z_m)");
  const auto [n, m] = *shape;
  const bool predicted = c031_prediction(n, m);
  const bool computed = s.report().holds(Property::kBaerStar);
  const std::string detail = "n = " + std::to_string(n) + ", m = " + std::to_string(m) + ": predicted " +
                             (predicted ? "Baer" : "not Baer") + ", computed " +
                             (computed ? "Baer" : "not Baer");
  if (predicted != computed) return fails(ring, detail, {});
  return holds(detail);
}

Outcome check_ex301(const Subject& s) {
  const auto& ring = s.analysis().ring();
  const auto& e = ring.expr();
  const auto* mat = e ? std::get_if<expr::Mat>(&e->node) : nullptr;
  if (!mat) return vacuous("not a matrix ring");
  const RingPtr base = build_ring(*mat->base).ring;
  const auto q = is_quasi_baer_star(RingAnalysis(base));
  if (!q.holds) return vacuous("base " + base->name() + " is not quasi-Baer");
  const auto& rep = s.report();
  if (!rep.holds(Property::kQuasiBaerStar)) return fails(ring, "matrix ring is not quasi-Baer", {});
  if (!rep.holds(Property::kPqBaerStar)) return fails(ring, "matrix ring is not p.q.-Baer", {});
  return holds("quasi-Baer base " + base->name() + "; " + ring.name() + " is quasi-Baer and p.q.-Baer");
}

Outcome check_nt301(const Subject& s) {
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  std::size_t matches = 0;
  for (Index x = 0; x < ring.order(); ++x) {
    const auto& rx = an.right_ann_principal(x);
    const Index cx = cover_or_none(an, x);
    for (const Index e : an.central_projections()) {
      const bool iff = an.right_ann(e) == rx;
      const bool a = cx == e && iff;
      const bool b = ring.mul(x, e) == x && iff;
      if (a != b) return fails(ring, "(a) and (b) disagree", {x, e});
      matches += a;
    }
  }
  return holds("(a) <=> (b) for every x and central e; " + count_of(matches, "pairs satisfy both"));
}

Outcome check_nc301(const Subject& s) {
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  std::optional<Index> miss;
  for (Index x = 0; x < ring.order() && !miss; ++x) {
    const auto c = an.cover(x);
    if (!c || an.right_ann(*c) != an.right_ann_principal(x)) miss = x;
  }
  return equivalence(ring, "weakly_pq_baer_star", s.report().holds(Property::kWeaklyPqBaerStar),
                     "C(x) exists with xRy = 0 <=> C(x)y = 0", !miss, miss);
}

Outcome check_th303(const Subject& s) {
  const auto& an = s.analysis();
  std::optional<Index> miss;
  for (Index x = 0; x < an.ring().order() && !miss; ++x) {
    if (!central_principal_match(an, x)) miss = x;
  }
  const bool rhs = s.report().holds(Property::kSemiProper) && !miss;
  return equivalence(an.ring(), "weakly_pq_baer_star", s.report().holds(Property::kWeaklyPqBaerStar),
                     "semi-proper and r(xR) = r(eR) for central e", rhs, miss);
}

Outcome check_th302(const Subject& s) {
  const auto& rep = s.report();
  return equivalence(s.analysis().ring(), "pq_baer_star", rep.holds(Property::kPqBaerStar),
                     "weakly_pq_baer_star and has_unity",
                     rep.holds(Property::kWeaklyPqBaerStar) && rep.holds(Property::kHasUnity), std::nullopt);
}

Outcome check_pr304(const Subject& s) {
  if (auto v = require_weakly_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  for (Index x = 0; x < ring.order(); ++x) {
    const Index cx = *an.cover(x);
    const auto& rx = an.right_ann_principal(x);
    for (Index y = 0; y < ring.order(); ++y) {
      if (rx.test(y) != (ring.mul(cx, *an.cover(y)) == ring.zero())) {
        return fails(ring, "xRy = 0 disagrees with C(x)C(y) = 0", {x, y});
      }
    }
  }
  return holds("xRy = 0 <=> C(x)C(y) = 0 for all x, y");
}

Outcome check_th301(const Subject& s) {
  if (auto v = require_weakly_pq(s)) return *v;
  const auto& an = s.analysis();
  const auto& ring = an.ring();
  std::size_t least = 0;
  for (const Index e : an.projections()) {
    for (const Index f : an.projections()) {
      const auto ub = an.upper_bound_central(an.projection(e), an.projection(f));
      const Index g = ub.bound.element.index();
      if (!an.is_central(g) || !an.is_projection(g)) return fails(ring, "bound is not a central projection", {e, f, g});
      if (!an.leq(e, g) || !an.leq(f, g)) return fails(ring, "bound is not an upper bound", {e, f, g});
      if (ub.least_central_bound && !ub.least_leq_bound) {
        return fails(ring, "least central bound is not below the constructed bound", {e, f, g});
      }
      if (an.is_central(f) && !ub.bound_is_least) {
        return fails(ring, "with f central the bound is not the least central bound", {e, f, g});
      }
      least += ub.bound_is_least;
    }
  }
  const std::size_t n = an.projections().size();
  return holds(count_of(n * n, "pairs bounded centrally; ") + count_of(least, "bounds are least"));
}

// -- action level -------------------------------------------------------------

Outcome check_def1(const Subject& s) {
  const auto& ext = s.extension();
  const auto& r1 = *ext.ring();
  const auto& base = *ext.base();
  const auto& k = *ext.scalars();
  const auto& action = ext.action();
  for (Index l = 1; l < k.order(); ++l)
    for (Index m = 1; m < k.order(); ++m)
      if (k.mul(l, m) == k.zero()) return fails(k, "scalars have zero divisors", {l, m});
  const auto laws = validate_scalar_action(action);
  for (const auto& law : laws.laws) {
    if (!law.passed) return vacuous("action breaks " + std::string(to_string(law.law)));
  }
  if (!ext.validation().passed()) return fails(r1, "R1 fails a ring axiom", {});
  if (r1.unity() != ext.pair(base.zero(), *k.unity())) return fails(r1, "(0, 1) is not the unity", {});
  if (const auto v = star_ideal_violation(ext)) return fails(r1, "R is not a *-ideal of R1", {v->first, v->second});
  const Index p = static_cast<Index>(k.order());
  for (Index x = 0; x < r1.order(); ++x) {
    const Index a = ext.base_part(x), l = ext.scalar_part(x);
    if (r1.star(x) != ext.pair(base.star(a), k.star(l))) return fails(r1, "(a, l)* != (a*, l*)", {x});
    for (Index b = 0; b < base.order(); ++b) {
      const Index ab = base.mul(a, b), la = base.add(a, b), lb = action.act(l, b);
      for (Index m = 0; m < p; ++m) {
        const Index y = ext.pair(b, m);
        const Index prod = ext.pair(base.add(ab, base.add(action.act(m, a), lb)), k.mul(l, m));
        if (r1.mul(x, y) != prod) return fails(r1, "(a, l)(b, m) != (ab + ma + lb, lm)", {x, y});
        if (r1.add(x, y) != ext.pair(la, k.add(l, m))) return fails(r1, "addition is not componentwise", {x, y});
      }
    }
  }
  return holds("action laws hold; R1 of order " + std::to_string(r1.order()) +
               " satisfies every axiom with unity (0 | 1) and R a *-ideal");
}

Outcome check_lm1(const Subject& s) {
  if (!s.base_report().holds(Property::kSemiProper)) return vacuous("involution of R is not semi-proper");
  const auto& v = s.report().at(Property::kSemiProper);
  if (!v.holds) return fails(s.analysis().ring(), "involution of R1 is not semi-proper", {v.witness.elements.front()});
  return holds("involutions of R and R1 are semi-proper");
}

Outcome check_lm3(const Subject& s) {
  const auto& ext = s.extension();
  const auto& base = s.base_analysis();
  const auto& big = s.analysis();
  for (Index x = 0; x < base.ring().order(); ++x) {
    const Index c = cover_or_none(base, x);
    const Index c1 = cover_or_none(big, ext.embed(x));
    for (const Index e : base.projections()) {
      if ((c == e) != (c1 == ext.embed(e))) {
        return fails(base.ring(), "C(x) = e disagrees with C((x, 0)) = (e, 0)", {x, e});
      }
    }
  }
  return holds("C(x) = e <=> C((x, 0)) = (e, 0) for every x and projection e");
}

Outcome check_th304(const Subject& s) {
  const auto& ext = s.extension();
  const auto& base = s.base_analysis();
  const auto& big = s.analysis();
  if (!s.base_report().holds(Property::kWeaklyPqBaerStar)) return vacuous("R is not weakly p.q.-Baer");
  const auto cond = check_condition_iii(ext.action(), base);
  if (!cond.holds) return vacuous("condition (iii) fails (" + cond.reason + ")");
  const auto& r = base.ring();
  const auto& r1 = big.ring();
  const auto& k = *ext.scalars();
  if (!s.report().holds(Property::kPqBaerStar)) return fails(r1, "R1 is not p.q.-Baer", {});
  for (Index a = 0; a < r.order(); ++a) {
    std::vector<Index> greatest(k.order(), kNoIndex);
    for (Index gamma = 1; gamma < k.order(); ++gamma) {
      const auto sp = greatest_scaling_projection(ext.action(), base, cond, a, gamma);
      if (!sp.greatest) return fails(r, "no greatest central g with ag = gamma g", {a});
      if (sp.constructed != sp.greatest) return fails(r, "constructed g is not the greatest", {a, *sp.greatest});
      greatest[gamma] = *sp.greatest;
    }
    for (Index lambda = 1; lambda < k.order(); ++lambda) {
      const Index g = greatest[k.neg(lambda)];
      const Index x = ext.pair(a, lambda);
      const Index expected = ext.pair(r.neg(g), *k.unity());
      if (big.cover(x) != expected) return fails(r1, "C((a, l)) != (-g, 1)", {x, expected});
    }
  }
  return holds("R1 is p.q.-Baer; greatest g equals the constructed g and C((a, l)) = (-g, 1) throughout");
}

Outcome check_c302(const Subject& s) {
  const auto& ext = s.extension();
  const auto& base = s.base_analysis();
  const auto& big = s.analysis();
  if (!s.base_report().holds(Property::kWeaklyPqBaerStar)) return vacuous("R is not weakly p.q.-Baer");
  const auto torsion = is_torsion_free(ext.action());
  if (!torsion.torsion_free) return vacuous("R is not a torsion-free module");
  const auto cond = check_condition_iii(ext.action(), base);
  if (!cond.holds) return fails(base.ring(), "condition (iii) fails (" + cond.reason + ")", {});
  if (!s.report().holds(Property::kPqBaerStar)) return fails(big.ring(), "R1 is not p.q.-Baer", {});
  for (Index x = 0; x < base.ring().order(); ++x) {
    const auto c = base.cover(x);
    if (!c || big.cover(ext.embed(x)) != ext.embed(*c)) return fails(base.ring(), "central cover not preserved", {x});
  }
  return holds("torsion-free, condition (iii) holds, R1 is p.q.-Baer and C((x, 0)) = (C(x), 0) for all x");
}

using Check = Outcome (*)(const Subject&);

struct Entry {
  TheoremInfo info;
  Check check;
};

const std::array<Entry, 24> kRegistry = {{
    {{"pr1", "p.q.-Baer implies unity and a semi-proper involution", false}, check_pr1},
    {{"rem01", "generators of r(zR) in a p.q.-Baer ring are central", false}, check_rem01},
    {{"th002", "p.q.-Baer: r(xR) = r(eR) = l(Rx) = l(Re) = (1-e)R = R(1-e) with e = C(x)", false}, check_th002},
    {{"ex01", "Rickart p.q.-Baer with a non-central projection: some RP(x) is no central cover", false}, check_ex01},
    {{"th1", "p.q.-Baer: C(x) = C(x*) and xRy = 0 <=> C(x)C(y) = 0", false}, check_th1},
    {{"cr3", "p.q.-Baer with central projections {0, 1}: xRy = 0 <=> x = 0 or y = 0", false}, check_cr3},
    {{"cor_cxy", "p.q.-Baer with C(xy) = C(x)C(y): Rickart and RP(x) = C(x)", false}, check_cor_cxy},
    {{"pr4", "p.q.-Baer: xRe = 0 <=> xRe_i = 0 for e the supremum of (e_i)", false}, check_pr4},
    {{"th7", "p.q.-Baer: B = B'' contains suprema of its central projections", false}, check_th7},
    {{"pr301", "p.q.-Baer <=> unity and r(xR) = r(eR) for a central e", false}, check_pr301},
    {{"ex_null", "R^2 = 0: 0 is the only projection and R is not p.q.-Baer", false}, check_ex_null},
    {{"c031", "Baer criterion for Z_m and M_n(Z_m)", false}, check_c031},
    {{"ex301", "matrix rings over quasi-Baer rings are quasi-Baer and p.q.-Baer", false}, check_ex301},
    {{"nt301", "C(x) = e and the annihilator condition <=> xe = x and the annihilator condition", false}, check_nt301},
    {{"nc301", "weakly p.q.-Baer <=> a central e with xe = x and (xRy = 0 <=> ey = 0)", false}, check_nc301},
    {{"th303", "weakly p.q.-Baer <=> semi-proper and r(xR) = r(eR) for a central e", false}, check_th303},
    {{"th302", "p.q.-Baer <=> weakly p.q.-Baer with unity", false}, check_th302},
    {{"def1", "R1 = R + K is a unital *-algebra with R a *-ideal", true}, check_def1},
    {{"lm1", "semi-proper involution on R gives one on R1", true}, check_lm1},
    {{"lm3", "C(x) = e in R <=> C((x, 0)) = (e, 0) in R1", true}, check_lm3},
    {{"pr304", "weakly p.q.-Baer: xRy = 0 <=> C(x)C(y) = 0", false}, check_pr304},
    {{"th301", "weakly p.q.-Baer: two projections have a central upper bound", false}, check_th301},
    {{"th304", "weakly p.q.-Baer with condition (iii): R1 is p.q.-Baer", true}, check_th304},
    {{"c302", "weakly p.q.-Baer and torsion-free: R1 is p.q.-Baer and keeps central covers", true}, check_c302},
}};

const std::array<TheoremInfo, 24> kInfos = [] {
  std::array<TheoremInfo, 24> out{};
  for (std::size_t i = 0; i < kRegistry.size(); ++i) out[i] = kRegistry[i].info;
  return out;
}();

const std::array<TheoremNote, 1> kNotes = {{
    {"ex001",
     "the ring of integer matrices [[a, b], [c, d]] with a = d, b = c = 0 mod 2 is p.q.-Baer but not Rickart; "
     "it is infinite and has no finite stand-in here"},
}};

const Entry& entry(std::string_view id) {
  for (const auto& e : kRegistry) {
    if (e.info.id == id) return e;
  }
  throw Error(ErrorKind::kUnknownTheorem, "unknown theorem '" + std::string(id) + "'");
}

}  // namespace

std::span<const TheoremInfo> theorem_registry() { return kInfos; }
const TheoremInfo& theorem_info(std::string_view id) { return entry(id).info; }
bool is_theorem_id(std::string_view id) {
  return std::any_of(kInfos.begin(), kInfos.end(), [&](const TheoremInfo& t) { return t.id == id; });
}
std::span<const TheoremNote> theorem_notes() { return kNotes; }

TheoremVerdict verify(std::string_view theorem_id, const Subject& subject) {
  const Entry& e = entry(theorem_id);
  if (e.info.action_level && subject.kind() != SubjectKind::kAction) {
    throw Error(ErrorKind::kSubjectKindMismatch,
                std::string(theorem_id) + " needs a scalar action; " + subject.name() + " is a ring");
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome o = e.check(subject);
  const auto stop = std::chrono::steady_clock::now();
  TheoremVerdict v;
  v.theorem_id = std::string(theorem_id);
  v.ring = subject.name();
  v.applicable = o.applicable;
  v.passed = o.passed;
  v.detail = std::move(o.detail);
  v.counterexample = std::move(o.counterexample);
  v.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return v;
}

std::vector<TheoremVerdict> verify_all(const Subject& subject, unsigned jobs) {
  std::vector<std::string_view> ids;
  for (const auto& t : kInfos) {
    if (!t.action_level || subject.kind() == SubjectKind::kAction) ids.push_back(t.id);
  }
  // Shared caches first, so workers only read them.
  subject.report();
  if (subject.kind() == SubjectKind::kAction) subject.base_report();
  std::vector<std::optional<TheoremVerdict>> slots(ids.size());
  parallel_for(ids.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) slots[i] = verify(ids[i], subject);
  });
  std::vector<TheoremVerdict> out;
  out.reserve(slots.size());
  for (auto& v : slots) out.push_back(std::move(*v));
  return out;
}

// ---------------------------------------------------------------------------
// Baer criterion table

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      out.push_back(p);
      m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

bool c031_prediction(std::uint32_t n, std::uint64_t m) {
  const auto factors = prime_factors(m);
  const bool square_free = std::adjacent_find(factors.begin(), factors.end()) == factors.end();
  if (n == 1) return square_free;
  return n == 2 && square_free &&
         std::all_of(factors.begin(), factors.end(), [](std::uint64_t p) { return p % 4 == 3; });
}

std::vector<C031Row> verify_c031_table(std::uint32_t n_max, std::uint64_t m_max, std::size_t carrier_bound,
                                       unsigned jobs) {
  std::vector<C031Row> rows;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t m = 2; m <= m_max; ++m) {
      C031Row row;
      row.n = n;
      row.m = m;
      row.predicted = c031_prediction(n, m);
      std::uint64_t order = 1;
      bool over = false;
      for (std::uint32_t i = 0; i < n * n && !over; ++i) {
        if (order > carrier_bound / m + 1) over = true;
        order *= m;
      }
      over = over || order > carrier_bound;
      row.order = over ? 0 : order;
      if (over) {
        row.skipped = true;
      } else {
        const RingPtr ring = n == 1 ? make_zmod(m, carrier_bound)
                                    : make_matrix_ring(n, make_zmod(m, carrier_bound), carrier_bound);
        row.computed = is_baer_star(RingAnalysis(ring, {jobs})).holds;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Search for unit-less weakly p.q.-Baer rings

namespace {

struct Candidate {
  std::string name;
  RingPtr ring;
  RingPtr parent;
  std::vector<Index> members;
};

class CandidatePool {
 public:
  void add(std::string name, RingPtr parent, std::vector<Index> members) {
    if (members.size() < 2) return;
    RingPtr ring = make_subring(parent, members, name);
    const auto t = cayley_tables(*ring);
    std::vector<Index> key;
    key.reserve(t.add.size() + t.mul.size() + t.star.size() + 1);
    key.push_back(t.order);
    key.insert(key.end(), t.add.begin(), t.add.end());
    key.insert(key.end(), t.mul.begin(), t.mul.end());
    key.insert(key.end(), t.star.begin(), t.star.end());
    if (!seen_.insert(std::move(key)).second) return;
    list_.push_back({std::move(name), std::move(ring), std::move(parent), std::move(members)});
  }

  void add_generated(const RingPtr& parent, std::uint64_t order_max) {
    const Index n = parent->order();
    auto try_seeds = [&](std::span<const Index> seeds) {
      const auto span = subring_closure(*parent, seeds, true, order_max);
      if (!span) return;
      std::string name = "subring of " + parent->name() + " generated by ";
      for (std::size_t i = 0; i < seeds.size(); ++i) name += (i ? ", " : "") + parent->format(seeds[i]);
      add(std::move(name), parent, span->members());
    };
    for (Index a = 1; a < n; ++a) {
      const Index seeds[] = {a};
      try_seeds(seeds);
    }
    for (Index a = 1; a < n; ++a)
      for (Index b = a + 1; b < n; ++b) {
        const Index seeds[] = {a, b};
        try_seeds(seeds);
      }
  }

  std::vector<Candidate>& list() { return list_; }

 private:
  std::set<std::vector<Index>> seen_;
  std::vector<Candidate> list_;
};

std::vector<Index> all_of_ring(const FiniteStarRing& r) {
  std::vector<Index> out(r.order());
  for (Index i = 0; i < r.order(); ++i) out[i] = i;
  return out;
}

constexpr std::uint64_t kProductOrderMax = 128;

}  // namespace

NonunitalSearch search_nonunital_weakly_pqbaer(std::uint64_t order_max, unsigned jobs) {
  if (order_max > kNonunitalSearchBudget) {
    throw Error(ErrorKind::kBudgetExceeded, "search order " + std::to_string(order_max) + " exceeds the budget of " +
                                                std::to_string(kNonunitalSearchBudget));
  }
  NonunitalSearch result;
  result.order_max = order_max;
  CandidatePool pool;

  for (std::uint64_t m = 2; m <= order_max; ++m) {
    const RingPtr null = make_null_ring(m);
    pool.add(null->name(), null, all_of_ring(*null));
  }
  // dZ_{kd} has order k and product a o b = d ab; every d mod k occurs.
  for (std::uint64_t k = 2; k <= order_max; ++k) {
    for (std::uint64_t c = 0; c < k; ++c) {
      const std::uint64_t d = c == 0 ? k : c;
      const RingPtr parent = make_zmod(k * d);
      std::vector<Index> members;
      for (std::uint64_t i = 0; i < k; ++i) members.push_back(static_cast<Index>(i * d));
      pool.add(std::to_string(d) + "Z_" + std::to_string(k * d), parent, std::move(members));
    }
  }
  std::vector<RingPtr> factors;
  for (const std::uint64_t m : {2, 3, 4, 5, 6, 7, 8, 9}) factors.push_back(make_zmod(m));
  for (const std::uint64_t m : {2, 3, 4}) factors.push_back(make_null_ring(m));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      if (std::uint64_t{factors[i]->order()} * factors[j]->order() > kProductOrderMax) continue;
      pool.add_generated(make_product({factors[i], factors[j]}), order_max);
    }
  }
  pool.add_generated(make_matrix_ring(2, make_zmod(2)), order_max);
  pool.add_generated(make_matrix_ring(2, make_zmod(3)), order_max);
  pool.add_generated(make_matrix_ring(2, make_zmod(5)), order_max);

  auto& candidates = pool.list();
  result.candidates = candidates.size();
  std::vector<char> unital(candidates.size(), 0), weak(candidates.size(), 0);
  parallel_for(candidates.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RingAnalysis an(candidates[i].ring);
      unital[i] = has_unity(an).holds;
      if (!unital[i]) weak[i] = is_weakly_pq_baer_star(an).holds;
    }
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (unital[i]) continue;
    ++result.nonunital;
    if (!weak[i]) continue;
    NonunitalFinding f;
    f.name = candidates[i].name;
    f.order = candidates[i].ring->order();
    for (const Index m : candidates[i].members) f.members.push_back(candidates[i].parent->format(m));
    result.findings.push_back(std::move(f));
  }
  return result;
}

}  // namespace starring
