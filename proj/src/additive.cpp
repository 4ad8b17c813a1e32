#include "starring/additive.hpp"

namespace starring {

std::vector<Index> members_of(const ElementBits& bits) {
  std::vector<Index> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != ElementBits::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Index>(i));
  }
  return out;
}

AdditiveSpan::AdditiveSpan(const FiniteStarRing& ring) : ring_(&ring), bits_(ring.order()) {
  bits_.set(ring.zero());
  members_.push_back(ring.zero());
}

bool AdditiveSpan::insert(Index a) {
  if (bits_.test(a)) return false;
  generators_.push_back(a);
  // span + <a> is the union of the cosets span + k a; they repeat once k a
  // falls back into the old span.
  const std::size_t old_size = members_.size();
  Index shift = a;
  while (!bits_.test(shift)) {
    for (std::size_t i = 0; i < old_size; ++i) {
      const Index v = ring_->add(members_[i], shift);
      bits_.set(v);
      members_.push_back(v);
    }
    shift = ring_->add(shift, a);
  }
  return true;
}

std::vector<Index> additive_generators(const FiniteStarRing& ring) {
  AdditiveSpan span(ring);
  for (Index a = 0; a < ring.order() && span.size() < ring.order(); ++a) span.insert(a);
  return span.generators();
}

AdditiveSpan ideal_closure(const FiniteStarRing& ring, std::span<const Index> seeds,
                           std::span<const Index> ring_generators) {
  AdditiveSpan span(ring);
  for (const Index s : seeds) span.insert(s);
  // Closing the span's generators under multiplication by the ring's additive
  // generators closes the whole span under R on both sides.
  for (std::size_t i = 0; i < span.generators().size(); ++i) {
    const Index h = span.generators()[i];
    for (const Index g : ring_generators) {
      span.insert(ring.mul(h, g));
      span.insert(ring.mul(g, h));
    }
  }
  return span;
}

std::optional<AdditiveSpan> subring_closure(const FiniteStarRing& ring,
                                            std::span<const Index> seeds, bool star_closed,
                                            std::size_t max_size) {
  AdditiveSpan span(ring);
  auto too_big = [&] { return span.size() > max_size; };
  for (const Index s : seeds) {
    span.insert(s);
    if (too_big()) return std::nullopt;
  }
  for (std::size_t i = 0; i < span.generators().size(); ++i) {
    const Index h = span.generators()[i];
    if (star_closed) {
      span.insert(ring.star(h));
      if (too_big()) return std::nullopt;
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const Index k = span.generators()[j];
      span.insert(ring.mul(h, k));
      span.insert(ring.mul(k, h));
      if (too_big()) return std::nullopt;
    }
  }
  return span;
}

ElementBits commutant(const FiniteStarRing& ring, std::span<const Index> set) {
  AdditiveSpan span(ring);
  for (const Index s : set) span.insert(s);
  const auto& gens = span.generators();
  ElementBits out(ring.order());
  for (Index x = 0; x < ring.order(); ++x) {
    bool commutes = true;
    for (std::size_t i = 0; i < gens.size() && commutes; ++i) {
      commutes = ring.mul(x, gens[i]) == ring.mul(gens[i], x);
    }
    if (commutes) out.set(x);
  }
  return out;
}

bool is_two_sided_ideal(const FiniteStarRing& ring, const ElementBits& bits,
                        std::span<const Index> ring_generators) {
  if (bits.size() != ring.order() || !bits.test(ring.zero())) return false;
  const auto members = members_of(bits);
  AdditiveSpan span(ring);
  for (const Index a : members) {
    span.insert(a);
    if (span.size() > members.size()) return false;
  }
  for (const Index a : members) {
    for (const Index g : ring_generators) {
      if (!bits.test(ring.mul(a, g)) || !bits.test(ring.mul(g, a))) return false;
    }
  }
  return true;
}

}  // namespace starring
