#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starring/projection.hpp"
#include "starring/ring.hpp"

namespace starring {

/// A left action of the prime field K = GF(p) on R, stored as a p x |R| table.
/// Construction only checks shapes; the algebra laws are checked by
/// validate_scalar_action.
class ScalarAction {
 public:
  ScalarAction(RingPtr scalars, RingPtr base, std::vector<Index> table);

  const RingPtr& scalars() const { return scalars_; }
  const RingPtr& base() const { return base_; }
  std::uint64_t prime() const { return scalars_->order(); }
  Index act(Index lambda, Index a) const {
    return table_[static_cast<std::size_t>(lambda) * base_->order() + a];
  }
  Element act(const Element& lambda, const Element& a) const;

 private:
  RingPtr scalars_;
  RingPtr base_;
  std::vector<Index> table_;
};

enum class ActionLaw {
  kUnit,              // 1 a = a
  kScalarAdditive,    // (l + m) a = l a + m a
  kVectorAdditive,    // l (a + b) = l a + l b
  kCompatible,        // (l m) a = l (m a)
  kLeftAlgebra,       // l (a b) = (l a) b
  kRightAlgebra,      // l (a b) = a (l b)
  kStarCompatible,    // (l a)* = l* a*
};

std::string_view to_string(ActionLaw law);

struct ActionLawResult {
  ActionLaw law;
  bool passed = true;
  std::vector<Index> scalars;   // failing scalars, in law order
  std::vector<Index> elements;  // failing ring elements, in law order
  std::uint64_t checked = 0;
};

struct ActionReport {
  std::vector<ActionLawResult> laws;
  bool passed() const;
  const ActionLawResult& result(ActionLaw law) const;
};

/// Every law on every tuple.
ActionReport validate_scalar_action(const ScalarAction& action);

/// lambda a = a + ... + a (lambda times). Requires characteristic(R) = p.
ScalarAction natural_scalar_action(RingPtr base, std::uint64_t p);

/// R1 = R + K with (a, l)(b, m) = (ab + m a + l b, l m) and componentwise
/// involution. Element (a, l) has coordinate a * p + l; literals read
/// "(a | l)".
class UnitalExtension {
 public:
  const RingPtr& ring() const { return ring_; }
  const ScalarAction& action() const { return action_; }
  const RingPtr& base() const { return action_.base(); }
  const RingPtr& scalars() const { return action_.scalars(); }

  Index pair(Index a, Index lambda) const { return a * static_cast<Index>(action_.prime()) + lambda; }
  Index base_part(Index x) const { return x / static_cast<Index>(action_.prime()); }
  Index scalar_part(Index x) const { return x % static_cast<Index>(action_.prime()); }
  Index embed(Index a) const { return pair(a, action_.scalars()->zero()); }
  Element embed(const Element& a) const;
  /// Inverse of embed on its image.
  std::optional<Index> restrict(Index x) const;

  const ValidationReport& validation() const { return validation_; }

 private:
  friend UnitalExtension unitify(const ScalarAction& action, std::size_t carrier_bound);
  UnitalExtension(ScalarAction action, RingPtr ring, ValidationReport validation);

  ScalarAction action_;
  RingPtr ring_;
  ValidationReport validation_;
};

/// Builds R1, checks every ring axiom completely, the unity (0, 1) and that
/// the image of R is a *-ideal. Throws kPreconditionViolated when the action
/// breaks a law and kSizeLimit when |R| p exceeds the bound.
UnitalExtension unitify(const ScalarAction& action, std::size_t carrier_bound = kDefaultCarrierBound);

/// Is embed(R) closed under +, -, * and under multiplication by R1 on both sides?
/// Returns the first offending (x, r) pair otherwise.
std::optional<std::pair<Index, Index>> star_ideal_violation(const UnitalExtension& ext);

struct ConditionIII {
  bool holds = true;
  std::vector<std::pair<Index, Index>> bounds;    // nonzero scalar -> e_scalar
  std::optional<std::pair<Index, Index>> failure;  // (scalar, t) without a bound
  std::string reason;
};

/// For every nonzero scalar l, a projection e_l of R with C(t) <= e_l whenever
/// l t = 0; the first such projection in coordinate order is reported.
ConditionIII check_condition_iii(const ScalarAction& action, const RingAnalysis& base);

struct TorsionReport {
  bool torsion_free = true;
  std::optional<std::pair<Index, Index>> witness;  // (scalar, element) with l a = 0
};

TorsionReport is_torsion_free(const ScalarAction& action);

/// Central projections g of R with a g = gamma g.
struct ScalingProjection {
  std::vector<Index> satisfying;      // all of them, sorted
  std::optional<Index> greatest;      // maximum of `satisfying` when it exists
  std::optional<Index> constructed;   // e - C(a - gamma e), e a central bound of C(a) and e_gamma
};

ScalingProjection greatest_scaling_projection(const ScalarAction& action, const RingAnalysis& base,
                                              const ConditionIII& condition, Index a, Index gamma);

}  // namespace starring
