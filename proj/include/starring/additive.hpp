#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "starring/ring.hpp"

namespace starring {

/// Membership bitmap over a ring's carrier, indexed by element coordinate.
using ElementBits = boost::dynamic_bitset<std::uint64_t>;

std::vector<Index> members_of(const ElementBits& bits);

/// The additive subgroup generated by the inserted elements, kept together
/// with an irredundant generating list (at most log2(order) generators).
class AdditiveSpan {
 public:
  explicit AdditiveSpan(const FiniteStarRing& ring);

  bool contains(Index a) const { return bits_.test(a); }
  /// Adds `a` to the span; returns false when it was already a member.
  bool insert(Index a);

  const ElementBits& bits() const { return bits_; }
  const std::vector<Index>& members() const { return members_; }
  const std::vector<Index>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }

 private:
  const FiniteStarRing* ring_;
  ElementBits bits_;
  std::vector<Index> members_;
  std::vector<Index> generators_;
};

/// Additive generators of the whole carrier. Every bi-additive identity
/// quantified over r in R reduces to these generators.
std::vector<Index> additive_generators(const FiniteStarRing& ring);

/// Smallest two-sided ideal containing `seeds`.
AdditiveSpan ideal_closure(const FiniteStarRing& ring, std::span<const Index> seeds,
                           std::span<const Index> ring_generators);

/// Smallest subring containing `seeds` (and closed under the involution when
/// `star_closed`). Returns nullopt once the closure exceeds `max_size`.
std::optional<AdditiveSpan> subring_closure(const FiniteStarRing& ring,
                                            std::span<const Index> seeds, bool star_closed,
                                            std::size_t max_size);

/// {x : x s = s x for every s in `set`}.
ElementBits commutant(const FiniteStarRing& ring, std::span<const Index> set);

/// True when `bits` is an additive subgroup closed under multiplication by
/// every ring element on both sides.
bool is_two_sided_ideal(const FiniteStarRing& ring, const ElementBits& bits,
                        std::span<const Index> ring_generators);

}  // namespace starring
