#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starring/projection.hpp"

namespace starring {

enum class Property {
  kBaerStar,
  kRickartStar,
  kWeaklyRickartStar,
  kQuasiBaerStar,
  kPqBaerStar,
  kWeaklyPqBaerStar,
  kSemiProper,
  kStarIfp,
  kReduced,
  kAbelian,
  kHasUnity,
  kCommutative,
};

inline constexpr std::array kAllProperties = {
    Property::kBaerStar,       Property::kRickartStar,      Property::kWeaklyRickartStar,
    Property::kQuasiBaerStar,  Property::kPqBaerStar,       Property::kWeaklyPqBaerStar,
    Property::kSemiProper,     Property::kStarIfp,          Property::kReduced,
    Property::kAbelian,        Property::kHasUnity,         Property::kCommutative,
};

std::string_view to_string(Property p);
std::optional<Property> property_from_string(std::string_view name);

/// Evidence attached to a verdict. Negative verdicts carry the first
/// counterexample in coordinate order; positive verdicts of existential
/// properties carry the witnessing projections.
struct Witness {
  std::string reason;
  std::vector<Index> elements;                // counterexample element, pair or tuple
  std::vector<Index> set;                     // a set that fails (sorted)
  std::vector<std::pair<Index, Index>> map;   // element -> witnessing projection
  std::vector<Index> generators;              // projections generating a family of sets
};

struct Verdict {
  bool holds = false;
  Witness witness;
};

struct ClassificationReport {
  std::string ring;
  Index order = 0;
  std::map<Property, Verdict> verdicts;

  const Verdict& at(Property p) const;
  bool holds(Property p) const { return at(p).holds; }
};

Verdict is_baer_star(const RingAnalysis& analysis);
Verdict is_rickart_star(const RingAnalysis& analysis);
Verdict is_weakly_rickart_star(const RingAnalysis& analysis);
Verdict is_quasi_baer_star(const RingAnalysis& analysis);
Verdict is_pq_baer_star(const RingAnalysis& analysis);
Verdict is_weakly_pq_baer_star(const RingAnalysis& analysis);
Verdict is_semi_proper(const RingAnalysis& analysis);
Verdict has_star_ifp(const RingAnalysis& analysis);
Verdict is_reduced(const RingAnalysis& analysis);
Verdict is_abelian(const RingAnalysis& analysis);
Verdict has_unity(const RingAnalysis& analysis);
Verdict is_commutative(const RingAnalysis& analysis);

Verdict evaluate(const RingAnalysis& analysis, Property p);
ClassificationReport classify(const RingAnalysis& analysis);
ClassificationReport classify(const RingPtr& ring);

/// Implications every report must satisfy; returns the violated ones.
std::vector<std::string> hierarchy_violations(const ClassificationReport& report);

/// The two-sided ideals of the ring: sums of principal ideals, each with an
/// irredundant additive generating list. Sorted by size, then by members.
std::vector<AdditiveSpan> two_sided_ideals(const RingAnalysis& analysis,
                                           std::size_t max_ideals = kDefaultCarrierBound);

}  // namespace starring
