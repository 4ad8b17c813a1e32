#include "starring/projection.hpp"

#include <algorithm>

#include "starring/parallel.hpp"

namespace starring {
namespace {

constexpr Index kNone = ~Index{0};

std::optional<Index> maybe(Index v) {
  if (v == kNone) return std::nullopt;
  return v;
}

std::size_t bits_hash(const ElementBits& bits) {
  return boost::hash_value(bits);
}

}  // namespace

struct RingAnalysis::Caches {
  std::once_flag generators_once;
  std::vector<Index> generators;

  std::once_flag projections_once;
  std::vector<Index> projections;
  std::vector<Index> central;
  std::vector<Index> position;  // coordinate -> slot in `projections`

  std::once_flag right_once;
  std::vector<ElementBits> right;
  std::once_flag left_once;
  std::vector<ElementBits> left;
  std::once_flag right_principal_once;
  std::vector<ElementBits> right_principal;
  std::once_flag left_principal_once;
  std::vector<ElementBits> left_principal;

  std::once_flag ideals_once;
  std::vector<ElementBits> right_ideals;
  std::vector<ElementBits> left_ideals;
  std::unordered_multimap<std::size_t, std::size_t> right_lookup;
  std::unordered_multimap<std::size_t, std::size_t> left_lookup;

  std::once_flag covers_once;
  std::vector<Index> covers;
  std::once_flag weak_once;
  std::vector<Index> weak;
};

RingAnalysis::RingAnalysis(RingPtr ring, AnalysisOptions options)
    : ring_(std::move(ring)), options_(options), caches_(std::make_unique<Caches>()) {
  if (!ring_) throw Error(ErrorKind::kInvalidParameter, "analysis without a ring");
}

RingAnalysis::~RingAnalysis() = default;

Index RingAnalysis::require_own(const Element& x) const {
  if (x.ring_ptr() != ring_) {
    throw Error(ErrorKind::kRingMismatch,
                "element of " + x.ring().name() + " used with " + ring_->name());
  }
  return x.index();
}

const std::vector<Index>& RingAnalysis::ring_generators() const {
  std::call_once(caches_->generators_once,
                 [&] { caches_->generators = additive_generators(*ring_); });
  return caches_->generators;
}

bool RingAnalysis::is_projection(Index a) const {
  return ring_->star(a) == a && ring_->mul(a, a) == a;
}

bool RingAnalysis::is_central(Index a) const {
  for (const Index g : ring_generators()) {
    if (ring_->mul(a, g) != ring_->mul(g, a)) return false;
  }
  return true;
}

const std::vector<Index>& RingAnalysis::projections() const {
  std::call_once(caches_->projections_once, [&] {
    auto& c = *caches_;
    c.position.assign(ring_->order(), kNone);
    for (Index a = 0; a < ring_->order(); ++a) {
      if (is_projection(a)) {
        c.position[a] = static_cast<Index>(c.projections.size());
        c.projections.push_back(a);
        if (is_central(a)) c.central.push_back(a);
      }
    }
  });
  return caches_->projections;
}

const std::vector<Index>& RingAnalysis::central_projections() const {
  projections();
  return caches_->central;
}

const ElementBits& RingAnalysis::right_ann(Index x) const {
  std::call_once(caches_->right_once, [&] {
    const Index n = ring_->order();
    auto& rows = caches_->right;
    rows.assign(n, ElementBits());
    parallel_for(n, options_.jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t a = begin; a < end; ++a) {
        ElementBits row(n);
        for (Index y = 0; y < n; ++y) {
          if (ring_->mul(static_cast<Index>(a), y) == ring_->zero()) row.set(y);
        }
        rows[a] = std::move(row);
      }
    });
  });
  return caches_->right[x];
}

const ElementBits& RingAnalysis::left_ann(Index x) const {
  std::call_once(caches_->left_once, [&] {
    const Index n = ring_->order();
    right_ann(0);
    auto& cols = caches_->left;
    cols.assign(n, ElementBits(n));
    for (Index a = 0; a < n; ++a) {
      const auto& row = caches_->right[a];
      for (auto y = row.find_first(); y != ElementBits::npos; y = row.find_next(y)) {
        cols[y].set(a);
      }
    }
  });
  return caches_->left[x];
}

const ElementBits& RingAnalysis::right_ann_principal(Index x) const {
  std::call_once(caches_->right_principal_once, [&] {
    const Index n = ring_->order();
    const auto& gens = ring_generators();
    right_ann(0);
    auto& out = caches_->right_principal;
    out.assign(n, ElementBits());
    const bool generated = options_.principal == PrincipalIdealReading::kGeneratedRightIdeal;
    // r(aR) is the intersection of r(a g) over additive generators g of R.
    parallel_for(n, options_.jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t a = begin; a < end; ++a) {
        ElementBits acc(n);
        acc.set();
        for (const Index g : gens) acc &= caches_->right[ring_->mul(static_cast<Index>(a), g)];
        if (generated) acc &= caches_->right[a];
        out[a] = std::move(acc);
      }
    });
  });
  return caches_->right_principal[x];
}

const ElementBits& RingAnalysis::left_ann_principal(Index x) const {
  std::call_once(caches_->left_principal_once, [&] {
    const Index n = ring_->order();
    const auto& gens = ring_generators();
    left_ann(0);
    auto& out = caches_->left_principal;
    out.assign(n, ElementBits());
    const bool generated = options_.principal == PrincipalIdealReading::kGeneratedRightIdeal;
    parallel_for(n, options_.jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t a = begin; a < end; ++a) {
        ElementBits acc(n);
        acc.set();
        for (const Index g : gens) acc &= caches_->left[ring_->mul(g, static_cast<Index>(a))];
        if (generated) acc &= caches_->left[a];
        out[a] = std::move(acc);
      }
    });
  });
  return caches_->left_principal[x];
}

ElementBits RingAnalysis::right_ann_of_set(std::span<const Index> set) const {
  AdditiveSpan span(*ring_);
  for (const Index s : set) span.insert(s);
  ElementBits acc(ring_->order());
  acc.set();
  for (const Index g : span.generators()) acc &= right_ann(g);
  return acc;
}

const ElementBits& RingAnalysis::right_ideal_of(Index e) const {
  std::call_once(caches_->ideals_once, [&] {
    auto& c = *caches_;
    const auto& ps = projections();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const Index p = ps[i];
      AdditiveSpan right(*ring_);
      AdditiveSpan left(*ring_);
      right.insert(p);
      left.insert(p);
      for (Index r = 0; r < ring_->order(); ++r) {
        right.insert(ring_->mul(p, r));
        left.insert(ring_->mul(r, p));
      }
      c.right_lookup.emplace(bits_hash(right.bits()), i);
      c.left_lookup.emplace(bits_hash(left.bits()), i);
      c.right_ideals.push_back(right.bits());
      c.left_ideals.push_back(left.bits());
    }
  });
  projections();
  const Index slot = caches_->position.at(e);
  if (slot == kNone) {
    throw Error(ErrorKind::kInvalidParameter, ring_->format(e) + " is not a projection");
  }
  return caches_->right_ideals[slot];
}

const ElementBits& RingAnalysis::left_ideal_of(Index e) const {
  right_ideal_of(e);
  return caches_->left_ideals[caches_->position[e]];
}

std::optional<Index> RingAnalysis::right_generator(const ElementBits& set) const {
  if (!projections().empty()) right_ideal_of(projections().front());
  const auto range = caches_->right_lookup.equal_range(bits_hash(set));
  for (auto it = range.first; it != range.second; ++it) {
    if (caches_->right_ideals[it->second] == set) return caches_->projections[it->second];
  }
  return std::nullopt;
}

std::optional<Index> RingAnalysis::left_generator(const ElementBits& set) const {
  if (!projections().empty()) right_ideal_of(projections().front());
  const auto range = caches_->left_lookup.equal_range(bits_hash(set));
  for (auto it = range.first; it != range.second; ++it) {
    if (caches_->left_ideals[it->second] == set) return caches_->projections[it->second];
  }
  return std::nullopt;
}

std::optional<Index> RingAnalysis::cover(Index x) const {
  std::call_once(caches_->covers_once, [&] {
    const auto& central = central_projections();
    auto& covers = caches_->covers;
    covers.assign(ring_->order(), kNone);
    std::vector<Index> fixing;
    for (Index a = 0; a < ring_->order(); ++a) {
      fixing.clear();
      for (const Index h : central) {
        if (ring_->mul(h, a) == a) fixing.push_back(h);
      }
      // The cover is a least element of `fixing`, not merely a minimal one.
      for (const Index h : fixing) {
        if (std::all_of(fixing.begin(), fixing.end(), [&](Index k) { return leq(h, k); })) {
          covers[a] = h;
          break;
        }
      }
    }
  });
  return maybe(caches_->covers[x]);
}

std::optional<Index> RingAnalysis::right_projection_of(Index x) const {
  std::optional<Index> found;
  for (const Index e : projections()) {
    if (ring_->mul(x, e) == x && right_ann(x) == right_ann(e)) {
      if (found) return std::nullopt;
      found = e;
    }
  }
  return found;
}

std::optional<Index> RingAnalysis::left_projection_of(Index x) const {
  std::optional<Index> found;
  for (const Index e : projections()) {
    if (ring_->mul(e, x) == x && left_ann(x) == left_ann(e)) {
      if (found) return std::nullopt;
      found = e;
    }
  }
  return found;
}

std::optional<Index> RingAnalysis::supremum_of(std::span<const Index> family) const {
  if (family.empty()) throw Error(ErrorKind::kEmptyFamily, "supremum of an empty family");
  std::vector<Index> upper;
  for (const Index p : projections()) {
    if (std::all_of(family.begin(), family.end(), [&](Index f) { return leq(f, p); })) {
      upper.push_back(p);
    }
  }
  for (const Index u : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](Index v) { return leq(u, v); })) return u;
  }
  return std::nullopt;
}

std::optional<Index> RingAnalysis::weakly_pq_witness(Index x) const {
  std::call_once(caches_->weak_once, [&] {
    const auto& central = central_projections();
    auto& weak = caches_->weak;
    weak.assign(ring_->order(), kNone);
    for (Index a = 0; a < ring_->order(); ++a) {
      const auto& rxr = right_ann_principal(a);
      for (const Index e : central) {
        if (ring_->mul(a, e) == a && rxr == right_ann(e)) {
          weak[a] = e;
          break;
        }
      }
    }
  });
  return maybe(caches_->weak[x]);
}

bool RingAnalysis::is_weakly_pq_baer() const {
  for (Index a = 0; a < ring_->order(); ++a) {
    if (!weakly_pq_witness(a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Element-level operations

std::vector<Element> RingAnalysis::to_elements(const ElementBits& bits) const {
  std::vector<Element> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != ElementBits::npos; i = bits.find_next(i)) {
    out.emplace_back(ring_, static_cast<Index>(i));
  }
  return out;
}

std::vector<Projection> RingAnalysis::all_projections() const {
  std::vector<Projection> out;
  for (const Index p : projections()) out.push_back(projection(p));
  return out;
}

std::vector<Projection> RingAnalysis::central_projection_list() const {
  std::vector<Projection> out;
  for (const Index p : central_projections()) out.push_back({element(p), true});
  return out;
}

bool RingAnalysis::proj_leq(const Projection& e, const Projection& f) const {
  return leq(require_own(e.element), require_own(f.element));
}

AnnihilatorSet RingAnalysis::right_annihilator_of_element(const Element& x) const {
  const Index a = require_own(x);
  AnnihilatorSet out{Side::kRight, "{" + x.to_string() + "}", to_elements(right_ann(a)), {}};
  if (const auto g = right_generator(right_ann(a))) out.generator = projection(*g);
  return out;
}

AnnihilatorSet RingAnalysis::left_annihilator_of_element(const Element& x) const {
  const Index a = require_own(x);
  AnnihilatorSet out{Side::kLeft, "{" + x.to_string() + "}", to_elements(left_ann(a)), {}};
  if (const auto g = left_generator(left_ann(a))) out.generator = projection(*g);
  return out;
}

AnnihilatorSet RingAnalysis::right_annihilator_of_principal(const Element& x) const {
  const Index a = require_own(x);
  const auto& bits = right_ann_principal(a);
  AnnihilatorSet out{Side::kRight, x.to_string() + "R", to_elements(bits), {}};
  if (const auto g = right_generator(bits)) out.generator = projection(*g);
  return out;
}

AnnihilatorSet RingAnalysis::left_annihilator_of_principal(const Element& x) const {
  const Index a = require_own(x);
  const auto& bits = left_ann_principal(a);
  AnnihilatorSet out{Side::kLeft, "R" + x.to_string(), to_elements(bits), {}};
  if (const auto g = left_generator(bits)) out.generator = projection(*g);
  return out;
}

AnnihilatorSet RingAnalysis::annihilator_of_ideal(std::span<const Element> ideal) const {
  ElementBits bits(ring_->order());
  std::vector<Index> members;
  for (const auto& x : ideal) {
    members.push_back(require_own(x));
    bits.set(members.back());
  }
  if (!is_two_sided_ideal(*ring_, bits, ring_generators())) {
    throw Error(ErrorKind::kNotAnIdeal, "the given set is not a two-sided ideal of " + ring_->name());
  }
  const ElementBits ann = right_ann_of_set(members);
  AnnihilatorSet out{Side::kRight, "ideal of " + std::to_string(bits.count()) + " elements",
                     to_elements(ann), {}};
  if (const auto g = right_generator(ann)) out.generator = projection(*g);
  return out;
}

std::vector<Element> RingAnalysis::principal_ideal(const Element& a) const {
  const Index seed = require_own(a);
  const auto span = ideal_closure(*ring_, std::span(&seed, 1), ring_generators());
  return to_elements(span.bits());
}

std::optional<CentralCoverCertificate> RingAnalysis::central_cover(const Element& x) const {
  const Index a = require_own(x);
  const auto h = cover(a);
  if (!h) return std::nullopt;
  CentralCoverCertificate cert{x, {element(*h), true}, {}};
  for (const Index k : central_projections()) {
    if (k != *h && leq(k, *h)) {
      cert.minimality_witnesses.emplace_back(element(k), element(ring_->mul(k, a)));
    }
  }
  return cert;
}

std::optional<Projection> RingAnalysis::right_projection(const Element& x) const {
  if (const auto e = right_projection_of(require_own(x))) return projection(*e);
  return std::nullopt;
}

std::optional<Projection> RingAnalysis::left_projection(const Element& x) const {
  if (const auto e = left_projection_of(require_own(x))) return projection(*e);
  return std::nullopt;
}

std::optional<Projection> RingAnalysis::supremum_of_projections(
    std::span<const Projection> family) const {
  std::vector<Index> members;
  for (const auto& p : family) {
    const Index e = require_own(p.element);
    if (!is_projection(e)) {
      throw Error(ErrorKind::kInvalidParameter, p.element.to_string() + " is not a projection");
    }
    members.push_back(e);
  }
  if (const auto s = supremum_of(members)) return projection(*s);
  return std::nullopt;
}

std::vector<Element> RingAnalysis::commutant(std::span<const Element> set) const {
  if (set.empty()) throw Error(ErrorKind::kInvalidParameter, "commutant of an empty set");
  std::vector<Index> members;
  for (const auto& x : set) members.push_back(require_own(x));
  return to_elements(starring::commutant(*ring_, members));
}

Index RingAnalysis::cover_or_throw(Index x) const {
  if (const auto h = cover(x)) return *h;
  throw Error(ErrorKind::kMissingCover, ring_->format(x) + " has no central cover");
}

bool RingAnalysis::very_orthogonal(const Projection& e, const Projection& f) const {
  const Index ce = cover_or_throw(require_own(e.element));
  const Index cf = cover_or_throw(require_own(f.element));
  return ring_->mul(ce, cf) == ring_->zero();
}

Index RingAnalysis::central_bound(Index e, Index f_central) const {
  // g = f + C(e - e f)
  const Index rest = ring_->sub(e, ring_->mul(e, f_central));
  return ring_->add(f_central, cover_or_throw(rest));
}

CentralUpperBound RingAnalysis::upper_bound_central(const Projection& e,
                                                    const Projection& f) const {
  const Index a = require_own(e.element);
  const Index b = require_own(f.element);
  if (!is_projection(a) || !is_projection(b)) {
    throw Error(ErrorKind::kInvalidParameter, "upper_bound_central expects projections");
  }
  if (!is_weakly_pq_baer()) {
    throw Error(ErrorKind::kPreconditionViolated,
                ring_->name() + " is not a weakly p.q.-Baer *-ring");
  }
  Index g;
  if (is_central(b)) {
    g = central_bound(a, b);
  } else if (is_central(a)) {
    g = central_bound(b, a);
  } else {
    // Bound each projection together with the central projection 0, then
    // bound the two (now central) results.
    const Index zero = ring_->zero();
    const Index e1 = central_bound(a, zero);
    const Index f1 = central_bound(b, zero);
    g = central_bound(e1, f1);
  }
  CentralUpperBound out{projection(g), std::nullopt, false, false};
  std::vector<Index> bounds;
  for (const Index c : central_projections()) {
    if (leq(a, c) && leq(b, c)) bounds.push_back(c);
  }
  for (const Index c : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](Index d) { return leq(c, d); })) {
      out.least_central_bound = Projection{element(c), true};
      out.least_leq_bound = leq(c, g);
      out.bound_is_least = c == g;
      break;
    }
  }
  return out;
}

std::vector<Projection> all_projections(const RingPtr& ring) {
  return RingAnalysis(ring).all_projections();
}

std::vector<Projection> central_projections(const RingPtr& ring) {
  return RingAnalysis(ring).central_projection_list();
}

std::optional<CentralCoverCertificate> central_cover(const Element& x) {
  return RingAnalysis(x.ring_ptr()).central_cover(x);
}

std::optional<Projection> right_projection(const Element& x) {
  return RingAnalysis(x.ring_ptr()).right_projection(x);
}

bool proj_leq(const Projection& e, const Projection& f) {
  require_same_ring(e.element, f.element);
  return e.element * f.element == e.element;
}

}  // namespace starring
