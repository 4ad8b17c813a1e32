#include "starring/unitification.hpp"

#include <algorithm>
#include <numeric>

#include "starring/additive.hpp"

namespace starring {

ScalarAction::ScalarAction(RingPtr scalars, RingPtr base, std::vector<Index> table)
    : scalars_(std::move(scalars)), base_(std::move(base)), table_(std::move(table)) {
  if (!scalars_ || !base_) throw Error(ErrorKind::kInvalidParameter, "scalar action needs two rings");
  if (!is_prime(scalars_->order()) || !scalars_->has_unity()) {
    throw Error(ErrorKind::kUnsupportedScalars,
                "scalars must be a prime field GF(p), got " + scalars_->name());
  }
  const std::size_t expected = static_cast<std::size_t>(scalars_->order()) * base_->order();
  if (table_.size() != expected) {
    throw Error(ErrorKind::kInvalidParameter, "action table has " + std::to_string(table_.size()) +
                                                  " entries, expected " + std::to_string(expected));
  }
  for (Index v : table_) {
    if (v >= base_->order()) throw Error(ErrorKind::kInvalidParameter, "action table entry out of range");
  }
}

Element ScalarAction::act(const Element& lambda, const Element& a) const {
  if (&lambda.ring() != scalars_.get() || &a.ring() != base_.get()) {
    throw Error(ErrorKind::kRingMismatch, "scalar action applied outside its rings");
  }
  return base_->element(act(lambda.index(), a.index()));
}

std::string_view to_string(ActionLaw law) {
  switch (law) {
    case ActionLaw::kUnit: return "unit";
    case ActionLaw::kScalarAdditive: return "scalar_additive";
    case ActionLaw::kVectorAdditive: return "vector_additive";
    case ActionLaw::kCompatible: return "compatible";
    case ActionLaw::kLeftAlgebra: return "left_algebra";
    case ActionLaw::kRightAlgebra: return "right_algebra";
    case ActionLaw::kStarCompatible: return "star_compatible";
  }
  return "unknown";
}

bool ActionReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const auto& l) { return l.passed; });
}

const ActionLawResult& ActionReport::result(ActionLaw law) const {
  for (const auto& l : laws)
    if (l.law == law) return l;
  throw Error(ErrorKind::kInvalidParameter, "law not in report");
}

namespace {

class LawChecker {
 public:
  explicit LawChecker(ActionLaw law) { result_.law = law; }
  void check(bool ok, std::initializer_list<Index> scalars, std::initializer_list<Index> elements) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.scalars.assign(scalars);
      result_.elements.assign(elements);
    }
  }
  ActionLawResult take() { return std::move(result_); }

 private:
  ActionLawResult result_;
};

}  // namespace

ActionReport validate_scalar_action(const ScalarAction& action) {
  const FiniteStarRing& k = *action.scalars();
  const FiniteStarRing& r = *action.base();
  const Index p = k.order(), n = r.order();
  const Index one = *k.unity();

  LawChecker unit(ActionLaw::kUnit), scalar_add(ActionLaw::kScalarAdditive),
      vector_add(ActionLaw::kVectorAdditive), compatible(ActionLaw::kCompatible),
      left(ActionLaw::kLeftAlgebra), right(ActionLaw::kRightAlgebra), star(ActionLaw::kStarCompatible);

  for (Index a = 0; a < n; ++a) unit.check(action.act(one, a) == a, {one}, {a});
  for (Index l = 0; l < p; ++l) {
    for (Index a = 0; a < n; ++a) {
      const Index la = action.act(l, a);
      star.check(r.star(la) == action.act(k.star(l), r.star(a)), {l}, {a});
      for (Index m = 0; m < p; ++m) {
        scalar_add.check(action.act(k.add(l, m), a) == r.add(la, action.act(m, a)), {l, m}, {a});
        compatible.check(action.act(k.mul(l, m), a) == action.act(l, action.act(m, a)), {l, m}, {a});
      }
      for (Index b = 0; b < n; ++b) {
        vector_add.check(action.act(l, r.add(a, b)) == r.add(la, action.act(l, b)), {l}, {a, b});
        const Index lab = action.act(l, r.mul(a, b));
        left.check(lab == r.mul(la, b), {l}, {a, b});
        right.check(lab == r.mul(a, action.act(l, b)), {l}, {a, b});
      }
    }
  }
  ActionReport report;
  for (auto* c : {&unit, &scalar_add, &vector_add, &compatible, &left, &right, &star})
    report.laws.push_back(c->take());
  return report;
}

ScalarAction natural_scalar_action(RingPtr base, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::kInvalidParameter, "scalar field order " + std::to_string(p) + " is not prime");
  if (base->characteristic() != p) {
    throw Error(ErrorKind::kUnsupportedScalars,
                "characteristic mismatch: " + base->name() + " has characteristic " +
                    std::to_string(base->characteristic()) + ", GF(" + std::to_string(p) +
                    ") cannot act on it");
  }
  const Index n = base->order();
  std::vector<Index> table(static_cast<std::size_t>(p) * n);
  for (Index a = 0; a < n; ++a) {
    Index acc = base->zero();
    for (Index l = 0; l < p; ++l) {
      table[static_cast<std::size_t>(l) * n + a] = acc;
      acc = base->add(acc, a);
    }
  }
  ScalarAction action(make_gf(p), std::move(base), std::move(table));
  const ActionReport report = validate_scalar_action(action);
  for (const auto& law : report.laws) {
    if (!law.passed) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "repeated addition breaks the " + std::string(to_string(law.law)) + " law on " +
                      action.base()->name());
    }
  }
  return action;
}

// ---------------------------------------------------------------------------

namespace {

class UnitifiedRing final : public FiniteStarRing {
 public:
  UnitifiedRing(const ScalarAction& action, Index order)
      : FiniteStarRing("unitify(" + action.base()->name() + ", " + action.scalars()->name() + ")", order,
                       unitified_expr(action)),
        action_(action),
        r_(*action.base()),
        k_(*action.scalars()),
        p_(k_.order()) {
    set_zero(pair(r_.zero(), k_.zero()));
    set_unity(pair(r_.zero(), *k_.unity()));
    set_characteristic(std::lcm<std::uint64_t>(r_.characteristic(), k_.characteristic()));
  }

  Index add(Index x, Index y) const override {
    return pair(r_.add(a(x), a(y)), k_.add(l(x), l(y)));
  }
  Index neg(Index x) const override { return pair(r_.neg(a(x)), k_.neg(l(x))); }
  Index mul(Index x, Index y) const override {
    const Index ab = r_.mul(a(x), a(y));
    const Index mu_a = action_.act(l(y), a(x));
    const Index lambda_b = action_.act(l(x), a(y));
    return pair(r_.add(r_.add(ab, mu_a), lambda_b), k_.mul(l(x), l(y)));
  }
  Index star(Index x) const override { return pair(r_.star(a(x)), k_.star(l(x))); }

  void write(Index x, std::string& out) const override {
    out += '(';
    r_.write(a(x), out);
    out += " | ";
    k_.write(l(x), out);
    out += ')';
  }
  Index read(LiteralCursor& cursor) const override {
    cursor.expect('(');
    const Index base = r_.read(cursor);
    cursor.expect('|');
    const Index scalar = k_.read(cursor);
    cursor.expect(')');
    return pair(base, scalar);
  }

 private:
  static RingExprPtr unitified_expr(const ScalarAction& action) {
    if (!action.base()->expr()) return nullptr;
    return RingExpr::unitify(action.base()->expr(), RingExpr::gf(action.prime()));
  }
  Index pair(Index base, Index scalar) const { return base * p_ + scalar; }
  Index a(Index x) const { return x / p_; }
  Index l(Index x) const { return x % p_; }

  ScalarAction action_;
  const FiniteStarRing& r_;
  const FiniteStarRing& k_;
  Index p_;
};

}  // namespace

UnitalExtension::UnitalExtension(ScalarAction action, RingPtr ring, ValidationReport validation)
    : action_(std::move(action)), ring_(std::move(ring)), validation_(std::move(validation)) {}

Element UnitalExtension::embed(const Element& a) const {
  if (&a.ring() != base().get()) throw Error(ErrorKind::kRingMismatch, "embed expects an element of " + base()->name());
  return ring_->element(embed(a.index()));
}

std::optional<Index> UnitalExtension::restrict(Index x) const {
  if (scalar_part(x) != scalars()->zero()) return std::nullopt;
  return base_part(x);
}

std::optional<std::pair<Index, Index>> star_ideal_violation(const UnitalExtension& ext) {
  const FiniteStarRing& r1 = *ext.ring();
  const auto inside = [&](Index x) { return ext.restrict(x).has_value(); };
  const std::vector<Index> gens = additive_generators(r1);
  for (Index a = 0; a < ext.base()->order(); ++a) {
    const Index x = ext.embed(a);
    if (!inside(r1.star(x)) || !inside(r1.neg(x))) return std::pair{x, x};
    for (Index g : gens) {
      if (!inside(r1.mul(x, g)) || !inside(r1.mul(g, x))) return std::pair{x, g};
    }
    for (Index b = 0; b < ext.base()->order(); ++b) {
      if (!inside(r1.add(x, ext.embed(b)))) return std::pair{x, ext.embed(b)};
    }
  }
  return std::nullopt;
}

UnitalExtension unitify(const ScalarAction& action, std::size_t carrier_bound) {
  const ActionReport laws = validate_scalar_action(action);
  for (const auto& law : laws.laws) {
    if (!law.passed) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "scalar action breaks the " + std::string(to_string(law.law)) + " law");
    }
  }
  const std::uint64_t order = checked_order_product(action.base()->order(), action.prime(), carrier_bound);
  RingPtr ring = std::make_shared<UnitifiedRing>(action, static_cast<Index>(order));
  ValidationReport validation = validate_axioms(*ring, ValidationMode::complete());
  if (!validation.passed()) {
    for (const auto& r : validation.axioms) {
      if (!r.passed) {
        throw Error(ErrorKind::kPreconditionViolated,
                    ring->name() + " fails " + std::string(to_string(r.axiom)));
      }
    }
  }
  UnitalExtension ext(action, std::move(ring), std::move(validation));
  if (auto bad = star_ideal_violation(ext)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "image of " + action.base()->name() + " is not a *-ideal at " + ext.ring()->format(bad->first));
  }
  return ext;
}

// ---------------------------------------------------------------------------

ConditionIII check_condition_iii(const ScalarAction& action, const RingAnalysis& base) {
  if (base.ring_ptr() != action.base()) {
    throw Error(ErrorKind::kRingMismatch, "analysis is for " + base.ring().name());
  }
  const FiniteStarRing& k = *action.scalars();
  const FiniteStarRing& r = *action.base();
  ConditionIII out;
  for (Index lambda = 0; lambda < k.order(); ++lambda) {
    if (lambda == k.zero()) continue;
    std::vector<Index> covers;
    for (Index t = 0; t < r.order(); ++t) {
      if (action.act(lambda, t) != r.zero()) continue;
      const auto c = base.cover(t);
      if (!c) {
        out.holds = false;
        out.failure = std::pair{lambda, t};
        out.reason = "no-cover";
        return out;
      }
      covers.push_back(*c);
    }
    std::optional<Index> bound;
    for (Index e : base.projections()) {
      if (std::all_of(covers.begin(), covers.end(), [&](Index c) { return base.leq(c, e); })) {
        bound = e;
        break;
      }
    }
    if (!bound) {
      out.holds = false;
      out.failure = std::pair{lambda, covers.empty() ? r.zero() : covers.front()};
      out.reason = "no projection bounds the covers";
      return out;
    }
    out.bounds.emplace_back(lambda, *bound);
  }
  return out;
}

TorsionReport is_torsion_free(const ScalarAction& action) {
  const FiniteStarRing& k = *action.scalars();
  const FiniteStarRing& r = *action.base();
  for (Index lambda = 0; lambda < k.order(); ++lambda) {
    if (lambda == k.zero()) continue;
    for (Index a = 0; a < r.order(); ++a) {
      if (a != r.zero() && action.act(lambda, a) == r.zero()) return {false, std::pair{lambda, a}};
    }
  }
  return {};
}

ScalingProjection greatest_scaling_projection(const ScalarAction& action, const RingAnalysis& base,
                                              const ConditionIII& condition, Index a, Index gamma) {
  const FiniteStarRing& r = *action.base();
  ScalingProjection out;
  for (Index g : base.central_projections()) {
    if (r.mul(a, g) == action.act(gamma, g)) out.satisfying.push_back(g);
  }
  for (Index g : out.satisfying) {
    if (std::all_of(out.satisfying.begin(), out.satisfying.end(), [&](Index k) { return base.leq(k, g); })) {
      out.greatest = g;
      break;
    }
  }

  if (!condition.holds || !base.is_weakly_pq_baer()) return out;
  const auto bound = std::find_if(condition.bounds.begin(), condition.bounds.end(),
                                  [&](const auto& b) { return b.first == gamma; });
  const auto cover_a = base.cover(a);
  if (bound == condition.bounds.end() || !cover_a) return out;
  const Index e = base.upper_bound_central(base.projection(*cover_a), base.projection(bound->second))
                      .bound.element.index();
  const auto h = base.cover(r.sub(a, action.act(gamma, e)));
  if (h) out.constructed = r.sub(e, *h);
  return out;
}

}  // namespace starring
