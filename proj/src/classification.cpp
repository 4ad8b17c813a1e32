#include "starring/classification.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace starring {
namespace {

struct BitsHash {
  std::size_t operator()(const ElementBits& b) const { return boost::hash_value(b); }
};

Verdict holds_with(Witness w) { return {true, std::move(w)}; }
Verdict fails_with(Witness w) { return {false, std::move(w)}; }

Verdict requires_unity(const RingAnalysis& analysis) {
  Witness w;
  w.reason = analysis.ring().name() + " has no unity: r(0) = R is not generated by a projection";
  w.elements = {analysis.ring().zero()};
  return fails_with(std::move(w));
}

bool nilpotent(const FiniteStarRing& ring, Index a) {
  Index x = a;
  for (Index reach = 1; reach < ring.order(); reach *= 2) x = ring.mul(x, x);
  // Distinct nonzero powers bound the nilpotency index by the order.
  return x == ring.zero();
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::kBaerStar: return "baer_star";
    case Property::kRickartStar: return "rickart_star";
    case Property::kWeaklyRickartStar: return "weakly_rickart_star";
    case Property::kQuasiBaerStar: return "quasi_baer_star";
    case Property::kPqBaerStar: return "pq_baer_star";
    case Property::kWeaklyPqBaerStar: return "weakly_pq_baer_star";
    case Property::kSemiProper: return "semi_proper";
    case Property::kStarIfp: return "star_ifp";
    case Property::kReduced: return "reduced";
    case Property::kAbelian: return "abelian";
    case Property::kHasUnity: return "has_unity";
    case Property::kCommutative: return "commutative";
  }
  return "unknown";
}

std::optional<Property> property_from_string(std::string_view name) {
  for (const Property p : kAllProperties) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

const Verdict& ClassificationReport::at(Property p) const {
  const auto it = verdicts.find(p);
  if (it == verdicts.end()) {
    throw Error(ErrorKind::kInvalidParameter, "property " + std::string(to_string(p)) + " not evaluated");
  }
  return it->second;
}

Verdict is_baer_star(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  if (!ring.has_unity()) return requires_unity(analysis);
  // Every r(S) is an intersection of element annihilators, and every such
  // intersection is some r(S); close {r(x)} under pairwise intersection.
  std::vector<ElementBits> family;
  std::unordered_map<ElementBits, std::size_t, BitsHash> seen;
  for (Index x = 0; x < ring.order(); ++x) {
    if (seen.emplace(analysis.right_ann(x), family.size()).second) {
      family.push_back(analysis.right_ann(x));
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElementBits meet = family[i] & family[j];
      if (seen.emplace(meet, family.size()).second) {
        if (family.size() >= kDefaultCarrierBound) {
          throw Error(ErrorKind::kSizeLimit, "annihilator closure of " + ring.name() +
                                                 " exceeds " + std::to_string(kDefaultCarrierBound) +
                                                 " sets");
        }
        family.push_back(std::move(meet));
      }
    }
  }
  Witness w;
  for (const auto& set : family) {
    const auto e = analysis.right_generator(set);
    if (!e) {
      w.reason = "an annihilator r(S) of " + std::to_string(set.count()) +
                 " elements is not eR for any projection e";
      w.set = members_of(set);
      return fails_with(std::move(w));
    }
    w.generators.push_back(*e);
  }
  std::sort(w.generators.begin(), w.generators.end());
  w.reason = std::to_string(family.size()) + " annihilators, each generated by a projection";
  return holds_with(std::move(w));
}

Verdict is_rickart_star(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  Witness w;
  for (Index x = 0; x < ring.order(); ++x) {
    const auto e = analysis.right_generator(analysis.right_ann(x));
    if (!e) {
      w.map.clear();
      w.reason = "r(x) is not generated by a projection";
      w.elements = {x};
      w.set = members_of(analysis.right_ann(x));
      return fails_with(std::move(w));
    }
    w.map.emplace_back(x, *e);
  }
  return holds_with(std::move(w));
}

Verdict is_weakly_rickart_star(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  Witness w;
  for (Index x = 0; x < ring.order(); ++x) {
    const auto& rx = analysis.right_ann(x);
    std::optional<Index> found;
    for (const Index e : analysis.projections()) {
      if (ring.mul(x, e) == x && rx.is_subset_of(analysis.right_ann(e))) {
        found = e;
        break;
      }
    }
    if (!found) {
      w.map.clear();
      w.reason = "no projection e with xe = x and (xy = 0 => ey = 0)";
      w.elements = {x};
      return fails_with(std::move(w));
    }
    w.map.emplace_back(x, *found);
  }
  return holds_with(std::move(w));
}

std::vector<AdditiveSpan> two_sided_ideals(const RingAnalysis& analysis, std::size_t max_ideals) {
  const auto& ring = analysis.ring();
  const auto& gens = analysis.ring_generators();
  std::vector<AdditiveSpan> ideals;
  std::unordered_map<ElementBits, std::size_t, BitsHash> seen;
  auto record = [&](AdditiveSpan span) {
    if (seen.emplace(span.bits(), ideals.size()).second) {
      if (ideals.size() >= max_ideals) {
        throw Error(ErrorKind::kSizeLimit, "ideal lattice of " + ring.name() + " exceeds " +
                                               std::to_string(max_ideals) + " ideals");
      }
      ideals.push_back(std::move(span));
    }
  };
  for (Index a = 0; a < ring.order(); ++a) {
    record(ideal_closure(ring, std::span(&a, 1), gens));
  }
  // Sums of ideals are ideals; close under pairwise sums.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (ideals[i].bits().is_subset_of(ideals[j].bits()) ||
          ideals[j].bits().is_subset_of(ideals[i].bits())) {
        continue;
      }
      AdditiveSpan sum = ideals[i];
      for (const Index g : ideals[j].generators()) sum.insert(g);
      record(std::move(sum));
    }
  }
  std::vector<std::size_t> order(ideals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (ideals[x].size() != ideals[y].size()) return ideals[x].size() < ideals[y].size();
    return members_of(ideals[x].bits()) < members_of(ideals[y].bits());
  });
  std::vector<AdditiveSpan> sorted;
  sorted.reserve(ideals.size());
  for (const std::size_t i : order) sorted.push_back(std::move(ideals[i]));
  return sorted;
}

Verdict is_quasi_baer_star(const RingAnalysis& analysis) {
  Witness w;
  const auto ideals = two_sided_ideals(analysis);
  for (const auto& ideal : ideals) {
    const ElementBits ann = analysis.right_ann_of_set(ideal.generators());
    const auto e = analysis.right_generator(ann);
    if (!e) {
      w.generators.clear();
      w.reason = "the right annihilator of an ideal of " + std::to_string(ideal.size()) +
                 " elements is not generated by a projection";
      w.elements = ideal.generators();
      w.set = members_of(ann);
      return fails_with(std::move(w));
    }
    w.generators.push_back(*e);
  }
  std::sort(w.generators.begin(), w.generators.end());
  w.generators.erase(std::unique(w.generators.begin(), w.generators.end()), w.generators.end());
  w.reason = std::to_string(ideals.size()) + " ideals, each annihilator generated by a projection";
  return holds_with(std::move(w));
}

Verdict is_pq_baer_star(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  Witness w;
  for (Index a = 0; a < ring.order(); ++a) {
    const auto e = analysis.right_generator(analysis.right_ann_principal(a));
    if (!e) {
      w.map.clear();
      w.reason = "r(aR) is not generated by a projection";
      w.elements = {a};
      w.set = members_of(analysis.right_ann_principal(a));
      return fails_with(std::move(w));
    }
    w.map.emplace_back(a, *e);
  }
  // Generators of r(aR) in a p.q.-Baer *-ring are necessarily central.
  for (const auto& [a, e] : w.map) {
    if (!analysis.is_central(e)) {
      throw std::logic_error("non-central generator of r(aR) in " + ring.name() +
                             " at a = " + ring.format(a));
    }
  }
  return holds_with(std::move(w));
}

Verdict is_weakly_pq_baer_star(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  Witness w;
  for (Index x = 0; x < ring.order(); ++x) {
    const auto e = analysis.weakly_pq_witness(x);
    if (!e) {
      w.map.clear();
      w.reason = "no central projection e with xe = x and (xRy = 0 <=> ey = 0)";
      w.elements = {x};
      return fails_with(std::move(w));
    }
    w.map.emplace_back(x, *e);
  }
  return holds_with(std::move(w));
}

Verdict is_semi_proper(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  const auto& gens = analysis.ring_generators();
  for (Index a = 0; a < ring.order(); ++a) {
    if (a == ring.zero()) continue;
    const Index a_star = ring.star(a);
    const bool nonzero = std::any_of(gens.begin(), gens.end(), [&](Index g) {
      return ring.mul(ring.mul(a, g), a_star) != ring.zero();
    });
    if (!nonzero) return fails_with({"aRa* = 0 for a nonzero a", {a}, {}, {}, {}});
  }
  return holds_with({"aRa* != 0 for every nonzero a", {}, {}, {}, {}});
}

Verdict has_star_ifp(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  const auto& gens = analysis.ring_generators();
  for (Index a = 0; a < ring.order(); ++a) {
    const auto& ra = analysis.right_ann(a);
    for (auto b = ra.find_first(); b != ElementBits::npos; b = ra.find_next(b)) {
      const Index b_star = ring.star(static_cast<Index>(b));
      for (const Index g : gens) {
        if (ring.mul(ring.mul(a, g), b_star) != ring.zero()) {
          return fails_with({"ab = 0 but aRb* != 0", {a, static_cast<Index>(b)}, {}, {}, {}});
        }
      }
    }
  }
  return holds_with({"ab = 0 implies aRb* = 0", {}, {}, {}, {}});
}

Verdict is_reduced(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  for (Index a = 0; a < ring.order(); ++a) {
    if (a != ring.zero() && nilpotent(ring, a)) {
      return fails_with({"nonzero nilpotent element", {a}, {}, {}, {}});
    }
  }
  return holds_with({"no nonzero nilpotent element", {}, {}, {}, {}});
}

Verdict is_abelian(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  const auto& gens = analysis.ring_generators();
  for (Index a = 0; a < ring.order(); ++a) {
    if (ring.mul(a, a) != a) continue;
    for (const Index g : gens) {
      if (ring.mul(a, g) != ring.mul(g, a)) {
        return fails_with({"idempotent that is not central", {a, g}, {}, {}, {}});
      }
    }
  }
  return holds_with({"every idempotent is central", {}, {}, {}, {}});
}

Verdict has_unity(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  const auto& gens = analysis.ring_generators();
  for (Index e = 0; e < ring.order(); ++e) {
    const bool identity = std::all_of(gens.begin(), gens.end(), [&](Index g) {
      return ring.mul(e, g) == g && ring.mul(g, e) == g;
    });
    if (identity) return holds_with({"two-sided identity", {e}, {}, {}, {}});
  }
  return fails_with({"no element is a two-sided identity", {}, {}, {}, {}});
}

Verdict is_commutative(const RingAnalysis& analysis) {
  const auto& ring = analysis.ring();
  const auto& gens = analysis.ring_generators();
  for (const Index g : gens) {
    for (const Index h : gens) {
      if (ring.mul(g, h) != ring.mul(h, g)) {
        return fails_with({"ab != ba", {g, h}, {}, {}, {}});
      }
    }
  }
  return holds_with({"ab = ba for all a, b", {}, {}, {}, {}});
}

Verdict evaluate(const RingAnalysis& analysis, Property p) {
  switch (p) {
    case Property::kBaerStar: return is_baer_star(analysis);
    case Property::kRickartStar: return is_rickart_star(analysis);
    case Property::kWeaklyRickartStar: return is_weakly_rickart_star(analysis);
    case Property::kQuasiBaerStar: return is_quasi_baer_star(analysis);
    case Property::kPqBaerStar: return is_pq_baer_star(analysis);
    case Property::kWeaklyPqBaerStar: return is_weakly_pq_baer_star(analysis);
    case Property::kSemiProper: return is_semi_proper(analysis);
    case Property::kStarIfp: return has_star_ifp(analysis);
    case Property::kReduced: return is_reduced(analysis);
    case Property::kAbelian: return is_abelian(analysis);
    case Property::kHasUnity: return has_unity(analysis);
    case Property::kCommutative: return is_commutative(analysis);
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown property");
}

ClassificationReport classify(const RingAnalysis& analysis) {
  ClassificationReport report;
  report.ring = analysis.ring().name();
  report.order = analysis.ring().order();
  for (const Property p : kAllProperties) report.verdicts.emplace(p, evaluate(analysis, p));
  return report;
}

ClassificationReport classify(const RingPtr& ring) { return classify(RingAnalysis(ring)); }

std::vector<std::string> hierarchy_violations(const ClassificationReport& r) {
  std::vector<std::string> out;
  auto implies = [&](Property a, Property b) {
    if (r.holds(a) && !r.holds(b)) {
      out.push_back(std::string(to_string(a)) + " => " + std::string(to_string(b)));
    }
  };
  implies(Property::kBaerStar, Property::kRickartStar);
  implies(Property::kRickartStar, Property::kWeaklyRickartStar);
  implies(Property::kBaerStar, Property::kQuasiBaerStar);
  implies(Property::kQuasiBaerStar, Property::kPqBaerStar);
  implies(Property::kPqBaerStar, Property::kWeaklyPqBaerStar);
  implies(Property::kPqBaerStar, Property::kHasUnity);
  implies(Property::kPqBaerStar, Property::kSemiProper);
  const bool weak_with_unity =
      r.holds(Property::kWeaklyPqBaerStar) && r.holds(Property::kHasUnity);
  if (weak_with_unity != r.holds(Property::kPqBaerStar)) {
    out.emplace_back("(weakly_pq_baer_star and has_unity) <=> pq_baer_star");
  }
  return out;
}

}  // namespace starring
