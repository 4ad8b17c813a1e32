#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "starring/additive.hpp"
#include "starring/ring.hpp"

namespace starring {

/// How the principal right ideal aR is read when the ring may lack unity.
enum class PrincipalIdealReading {
  kProductSet,          // aR = {a r : r in R}
  kGeneratedRightIdeal  // aR = Za + {a r : r in R}
};

struct AnalysisOptions {
  unsigned jobs = 1;  // 0 = hardware concurrency
  PrincipalIdealReading principal = PrincipalIdealReading::kProductSet;
};

/// A self-adjoint idempotent.
struct Projection {
  Element element;
  bool is_central = false;

  friend bool operator==(const Projection& a, const Projection& b) { return a.element == b.element; }
};

enum class Side { kRight, kLeft };

struct AnnihilatorSet {
  Side kind = Side::kRight;
  std::string annihilated;       // human-readable description of S
  std::vector<Element> members;  // sorted by coordinate
  /// Set when members = Ze + eR (right) or Ze + Re (left) for a projection e.
  std::optional<Projection> generator;
};

struct CentralCoverCertificate {
  Element x;
  Projection cover;
  /// Every central projection h' <= cover, h' != cover, paired with h' x != x.
  std::vector<std::pair<Element, Element>> minimality_witnesses;
};

struct CentralUpperBound {
  Projection bound;  // constructive g from the covers of e and f
  /// Least element of {central c : e <= c, f <= c} when one exists.
  std::optional<Projection> least_central_bound;
  bool least_leq_bound = false;  // least_central_bound <= bound
  bool bound_is_least = false;
};

/// Caches the exhaustive scans (projections, annihilators, central covers)
/// for one ring. Every cache is filled at most once and is safe to read from
/// many threads; all results are independent of the worker count.
class RingAnalysis {
 public:
  explicit RingAnalysis(RingPtr ring, AnalysisOptions options = {});
  ~RingAnalysis();
  RingAnalysis(const RingAnalysis&) = delete;
  RingAnalysis& operator=(const RingAnalysis&) = delete;

  const FiniteStarRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const AnalysisOptions& options() const { return options_; }
  Element element(Index a) const { return Element(ring_, a); }
  Index require_own(const Element& x) const;

  // -- coordinate-level queries --------------------------------------------
  const std::vector<Index>& ring_generators() const;
  const std::vector<Index>& projections() const;
  const std::vector<Index>& central_projections() const;
  bool is_projection(Index a) const;
  bool is_central(Index a) const;
  bool leq(Index e, Index f) const { return ring_->mul(e, f) == e; }
  Projection projection(Index e) const { return {element(e), is_central(e)}; }

  const ElementBits& right_ann(Index x) const;            // r({x})
  const ElementBits& left_ann(Index x) const;             // l({x})
  const ElementBits& right_ann_principal(Index x) const;  // r(xR)
  const ElementBits& left_ann_principal(Index x) const;   // l(Rx)
  /// x R y = 0 under the configured reading of xR.
  bool annihilates_through_ring(Index x, Index y) const { return right_ann_principal(x).test(y); }
  ElementBits right_ann_of_set(std::span<const Index> set) const;

  /// Ze + eR and Ze + Re for a projection e.
  const ElementBits& right_ideal_of(Index e) const;
  const ElementBits& left_ideal_of(Index e) const;
  std::optional<Index> right_generator(const ElementBits& set) const;
  std::optional<Index> left_generator(const ElementBits& set) const;

  std::optional<Index> cover(Index x) const;
  std::optional<Index> right_projection_of(Index x) const;
  std::optional<Index> left_projection_of(Index x) const;
  std::optional<Index> supremum_of(std::span<const Index> family) const;
  /// A central projection e with x e = x and (x R y = 0 iff e y = 0), the
  /// first one in coordinate order.
  std::optional<Index> weakly_pq_witness(Index x) const;
  bool is_weakly_pq_baer() const;

  // -- element-level operations ----------------------------------------------
  std::vector<Projection> all_projections() const;
  std::vector<Projection> central_projection_list() const;
  bool proj_leq(const Projection& e, const Projection& f) const;
  AnnihilatorSet right_annihilator_of_element(const Element& x) const;
  AnnihilatorSet left_annihilator_of_element(const Element& x) const;
  AnnihilatorSet right_annihilator_of_principal(const Element& a) const;
  AnnihilatorSet left_annihilator_of_principal(const Element& a) const;
  /// Right annihilator of a two-sided ideal; throws kNotAnIdeal otherwise.
  AnnihilatorSet annihilator_of_ideal(std::span<const Element> ideal) const;
  /// The two-sided ideal generated by `a`, sorted.
  std::vector<Element> principal_ideal(const Element& a) const;
  std::optional<CentralCoverCertificate> central_cover(const Element& x) const;
  std::optional<Projection> right_projection(const Element& x) const;
  std::optional<Projection> left_projection(const Element& x) const;
  std::optional<Projection> supremum_of_projections(std::span<const Projection> family) const;
  std::vector<Element> commutant(std::span<const Element> set) const;
  bool very_orthogonal(const Projection& e, const Projection& f) const;
  /// Central g with e <= g and f <= g built from central covers; requires a
  /// weakly p.q.-Baer ring (kPreconditionViolated otherwise).
  CentralUpperBound upper_bound_central(const Projection& e, const Projection& f) const;

 private:
  struct Caches;

  std::vector<Element> to_elements(const ElementBits& bits) const;
  Index cover_or_throw(Index x) const;
  Index central_bound(Index e, Index f_central) const;

  RingPtr ring_;
  AnalysisOptions options_;
  std::unique_ptr<Caches> caches_;
};

// One-off conveniences; each builds a fresh RingAnalysis.
std::vector<Projection> all_projections(const RingPtr& ring);
std::vector<Projection> central_projections(const RingPtr& ring);
std::optional<CentralCoverCertificate> central_cover(const Element& x);
std::optional<Projection> right_projection(const Element& x);
bool proj_leq(const Projection& e, const Projection& f);

}  // namespace starring
