#include "starring/ring.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <random>

namespace starring {

// ---------------------------------------------------------------------------
// Element

Element::Element(RingPtr ring, Index index) : ring_(std::move(ring)), index_(index) {
  if (!ring_) throw Error(ErrorKind::kInvalidParameter, "element without a ring");
  if (index_ >= ring_->order()) {
    throw Error(ErrorKind::kInvalidParameter,
                "element coordinate " + std::to_string(index_) + " outside " + ring_->name());
  }
}

void require_same_ring(const Element& a, const Element& b) {
  if (a.ring_ptr() != b.ring_ptr()) {
    throw Error(ErrorKind::kRingMismatch, "elements belong to different rings (" +
                                              a.ring().name() + ", " + b.ring().name() + ")");
  }
}

Element Element::star() const { return Element(ring_, ring_->star(index_)); }

bool Element::is_zero() const { return index_ == ring_->zero(); }

std::string Element::to_string() const { return ring_->format(index_); }

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return Element(a.ring_, a.ring_->add(a.index_, b.index_));
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return Element(a.ring_, a.ring_->sub(a.index_, b.index_));
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return Element(a.ring_, a.ring_->mul(a.index_, b.index_));
}

Element operator-(const Element& a) { return Element(a.ring_, a.ring_->neg(a.index_)); }

// ---------------------------------------------------------------------------
// LiteralCursor

void LiteralCursor::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool LiteralCursor::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char LiteralCursor::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool LiteralCursor::consume(char c) {
  if (peek() == c) {
    ++pos_;
    return true;
  }
  return false;
}

void LiteralCursor::expect(char c) {
  if (!consume(c)) fail(std::string("expected '") + c + "'");
}

std::uint64_t LiteralCursor::read_uint() {
  skip_space();
  if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    fail("expected a decimal integer");
  }
  std::uint64_t value = 0;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("integer overflow");
    value = value * 10 + digit;
    ++pos_;
  }
  return value;
}

void LiteralCursor::fail(const std::string& what) const {
  throw Error(ErrorKind::kLiteralParse, "element literal \"" + std::string(text_) +
                                            "\" at offset " + std::to_string(pos_) + ": " + what);
}

// ---------------------------------------------------------------------------
// FiniteStarRing

FiniteStarRing::FiniteStarRing(std::string name, Index order, RingExprPtr expr)
    : name_(std::move(name)), order_(order), expr_(std::move(expr)) {
  if (order_ == 0) throw Error(ErrorKind::kInvalidParameter, "ring with empty carrier");
}

Index FiniteStarRing::scale(std::uint64_t k, Index a) const {
  Index result = zero_;
  Index power = a;
  while (k) {
    if (k & 1u) result = add(result, power);
    k >>= 1;
    if (k) power = add(power, power);
  }
  return result;
}

std::string FiniteStarRing::format(Index a) const {
  std::string out;
  write(a, out);
  return out;
}

Index FiniteStarRing::parse(std::string_view literal) const {
  LiteralCursor cursor(literal);
  const Index value = read(cursor);
  if (!cursor.at_end()) cursor.fail("trailing input");
  return value;
}

Element FiniteStarRing::element(Index a) const { return Element(shared_from_this(), a); }

Element FiniteStarRing::parse_element(std::string_view literal) const {
  return element(parse(literal));
}

void FiniteStarRing::detect_unity() {
  unity_.reset();
  for (Index e = 0; e < order_; ++e) {
    bool ok = true;
    for (Index a = 0; a < order_ && ok; ++a) {
      ok = mul(e, a) == a && mul(a, e) == a;
    }
    if (ok) {
      unity_ = e;
      return;
    }
  }
}

void FiniteStarRing::detect_characteristic() {
  std::uint64_t exponent = 1;
  for (Index a = 0; a < order_; ++a) {
    std::uint64_t k = 1;
    for (Index s = a; s != zero_; s = add(s, a)) {
      ++k;
      if (k > order_) break;  // malformed tables; stop
    }
    if (a == zero_) k = 1;
    exponent = std::lcm(exponent, k);
  }
  characteristic_ = exponent;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_order_product(std::uint64_t a, std::uint64_t b, std::size_t carrier_bound) {
  if (a != 0 && b > carrier_bound / a + 1) {
    throw Error(ErrorKind::kSizeLimit,
                "carrier exceeds the bound of " + std::to_string(carrier_bound) + " elements");
  }
  const std::uint64_t product = a * b;
  if (product > carrier_bound) {
    throw Error(ErrorKind::kSizeLimit, "carrier of " + std::to_string(product) +
                                           " elements exceeds the bound of " +
                                           std::to_string(carrier_bound) + " elements");
  }
  return product;
}

// ---------------------------------------------------------------------------
// Axiom validation

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kAddAssociative: return "add_associative";
    case Axiom::kAddCommutative: return "add_commutative";
    case Axiom::kAddIdentity: return "add_identity";
    case Axiom::kAddInverse: return "add_inverse";
    case Axiom::kMulAssociative: return "mul_associative";
    case Axiom::kLeftDistributive: return "left_distributive";
    case Axiom::kRightDistributive: return "right_distributive";
    case Axiom::kStarAdditive: return "star_additive";
    case Axiom::kStarAntiMultiplicative: return "star_anti_multiplicative";
    case Axiom::kStarInvolutive: return "star_involutive";
    case Axiom::kUnityLaw: return "unity_law";
    case Axiom::kStarUnity: return "star_unity";
    case Axiom::kCharacteristic: return "characteristic";
  }
  return "unknown";
}

ValidationMode ValidationMode::automatic(Index order, std::uint64_t seed) {
  if (order <= kDefaultExhaustiveLimit) return {true, 0, seed};
  return {false, kDefaultSampleCount, seed};
}

bool ValidationReport::passed() const {
  for (const auto& r : axioms) {
    if (!r.passed) return false;
  }
  return true;
}

const AxiomResult& ValidationReport::result(Axiom axiom) const {
  for (const auto& r : axioms) {
    if (r.axiom == axiom) return r;
  }
  throw Error(ErrorKind::kInvalidParameter,
              "axiom " + std::string(to_string(axiom)) + " not in report");
}

CayleyTables cayley_tables(const FiniteStarRing& ring) {
  const Index n = ring.order();
  CayleyTables t;
  t.order = n;
  t.zero = ring.zero();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  t.add.resize(nn);
  t.mul.resize(nn);
  t.neg.resize(n);
  t.star.resize(n);
  for (Index a = 0; a < n; ++a) {
    t.neg[a] = ring.neg(a);
    t.star[a] = ring.star(a);
    for (Index b = 0; b < n; ++b) {
      t.add[static_cast<std::size_t>(a) * n + b] = ring.add(a, b);
      t.mul[static_cast<std::size_t>(a) * n + b] = ring.mul(a, b);
    }
  }
  return t;
}

namespace {

struct RingOps {
  const FiniteStarRing& ring;
  Index add(Index a, Index b) const { return ring.add(a, b); }
  Index mul(Index a, Index b) const { return ring.mul(a, b); }
};

struct TableOps {
  const CayleyTables& t;
  Index add(Index a, Index b) const { return t.add[static_cast<std::size_t>(a) * t.order + b]; }
  Index mul(Index a, Index b) const { return t.mul[static_cast<std::size_t>(a) * t.order + b]; }
};

class Checker {
 public:
  explicit Checker(Axiom axiom) { result_.axiom = axiom; }

  void check(bool ok, std::initializer_list<Index> tuple) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample.assign(tuple);
    }
  }
  bool failed() const { return !result_.passed; }
  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

template <typename Ops>
void check_pairs_and_triples(const FiniteStarRing& ring, const Ops& ops, const ValidationMode& mode,
                             Checker& add_assoc, Checker& mul_assoc, Checker& left_dist,
                             Checker& right_dist, Checker& add_comm, Checker& star_add,
                             Checker& star_mul) {
  const Index n = ring.order();
  auto pair = [&](Index a, Index b) {
    add_comm.check(ops.add(a, b) == ops.add(b, a), {a, b});
    star_add.check(ring.star(ops.add(a, b)) == ops.add(ring.star(a), ring.star(b)), {a, b});
    star_mul.check(ring.star(ops.mul(a, b)) == ops.mul(ring.star(b), ring.star(a)), {a, b});
  };
  auto triple = [&](Index a, Index b, Index c, Index ab, Index a_plus_b) {
    add_assoc.check(ops.add(a_plus_b, c) == ops.add(a, ops.add(b, c)), {a, b, c});
    mul_assoc.check(ops.mul(ab, c) == ops.mul(a, ops.mul(b, c)), {a, b, c});
    left_dist.check(ops.mul(a, ops.add(b, c)) == ops.add(ab, ops.mul(a, c)), {a, b, c});
    right_dist.check(ops.mul(a_plus_b, c) == ops.add(ops.mul(a, c), ops.mul(b, c)), {a, b, c});
  };

  if (mode.exhaustive) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        pair(a, b);
        const Index ab = ops.mul(a, b);
        const Index a_plus_b = ops.add(a, b);
        for (Index c = 0; c < n; ++c) triple(a, b, c, ab, a_plus_b);
      }
    }
    return;
  }
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (std::size_t i = 0; i < mode.samples; ++i) {
    const Index a = pick(rng);
    const Index b = pick(rng);
    const Index c = pick(rng);
    pair(a, b);
    triple(a, b, c, ops.mul(a, b), ops.add(a, b));
  }
}

// Greedy generators of the carrier under left-to-right sums g1 + g2 + ...,
// computed from the raw addition so nothing about it is assumed.
std::vector<Index> sum_generators(const FiniteStarRing& ring) {
  const Index n = ring.order();
  std::vector<Index> gens;
  std::vector<char> reached(n, 0);
  std::size_t count = 0;
  for (Index a = 0; a < n && count < n; ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    std::vector<Index> frontier;
    for (Index x = 0; x < n; ++x)
      if (reached[x]) frontier.push_back(x);
    for (Index g : gens)
      if (!reached[g]) {
        reached[g] = 1;
        ++count;
        frontier.push_back(g);
      }
    while (!frontier.empty()) {
      const Index x = frontier.back();
      frontier.pop_back();
      for (Index g : gens) {
        const Index y = ring.add(x, g);
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          frontier.push_back(y);
        }
      }
    }
  }
  return gens;
}

template <typename Ops>
void check_reduced(const FiniteStarRing& ring, const Ops& ops, Checker& add_assoc, Checker& mul_assoc,
                   Checker& left_dist, Checker& right_dist, Checker& add_comm, Checker& star_add,
                   Checker& star_mul) {
  const Index n = ring.order();
  const std::vector<Index> gens = sum_generators(ring);
  auto star = [&](Index a) { return ring.star(a); };

  // The set of c for which a law holds for all a, b is closed under + once
  // the laws checked before it hold; containing the generators, it is R.
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = ops.add(a, b);
      for (Index g : gens) add_assoc.check(ops.add(ab, g) == ops.add(a, ops.add(b, g)), {a, b, g});
    }
  for (Index a = 0; a < n; ++a) {
    for (Index g : gens) {
      add_comm.check(ops.add(a, g) == ops.add(g, a), {a, g});
      star_add.check(star(ops.add(a, g)) == ops.add(star(a), star(g)), {a, g});
    }
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = ops.mul(a, b), a_plus_b = ops.add(a, b);
      for (Index g : gens) {
        left_dist.check(ops.mul(a, ops.add(b, g)) == ops.add(ab, ops.mul(a, g)), {a, b, g});
        right_dist.check(ops.mul(a_plus_b, g) == ops.add(ops.mul(a, g), ops.mul(b, g)), {a, b, g});
      }
    }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = ops.mul(a, b);
      for (Index g : gens) mul_assoc.check(ops.mul(ab, g) == ops.mul(a, ops.mul(b, g)), {a, b, g});
    }
  for (Index a = 0; a < n; ++a)
    for (Index g : gens) star_mul.check(star(ops.mul(a, g)) == ops.mul(star(g), star(a)), {a, g});
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ValidationReport validate_axioms(const FiniteStarRing& ring, ValidationMode mode) {
  const Index n = ring.order();
  const Index zero = ring.zero();

  Checker add_assoc(Axiom::kAddAssociative), add_comm(Axiom::kAddCommutative),
      add_id(Axiom::kAddIdentity), add_inv(Axiom::kAddInverse), mul_assoc(Axiom::kMulAssociative),
      left_dist(Axiom::kLeftDistributive), right_dist(Axiom::kRightDistributive),
      star_add(Axiom::kStarAdditive), star_mul(Axiom::kStarAntiMultiplicative),
      star_inv(Axiom::kStarInvolutive), unity_law(Axiom::kUnityLaw),
      star_unity(Axiom::kStarUnity), characteristic(Axiom::kCharacteristic);

  // Single-element laws are always checked on the whole carrier.
  for (Index a = 0; a < n; ++a) {
    add_id.check(ring.add(a, zero) == a && ring.add(zero, a) == a, {a});
    add_inv.check(ring.add(a, ring.neg(a)) == zero, {a});
    star_inv.check(ring.star(ring.star(a)) == a, {a});
    if (const auto& u = ring.unity()) {
      unity_law.check(ring.mul(*u, a) == a && ring.mul(a, *u) == a, {a});
    }
    characteristic.check(ring.scale(ring.characteristic(), a) == zero, {a});
  }
  if (const auto& u = ring.unity()) star_unity.check(ring.star(*u) == *u, {*u});
  AxiomResult char_result = characteristic.take();
  if (char_result.passed) {
    // Minimality: for each prime q dividing the characteristic some element
    // survives multiplication by characteristic / q.
    for (const std::uint64_t q : prime_factors(ring.characteristic())) {
      bool witnessed = false;
      for (Index a = 0; a < n && !witnessed; ++a) {
        witnessed = ring.scale(ring.characteristic() / q, a) != zero;
      }
      ++char_result.checked;
      if (!witnessed) {
        char_result.passed = false;
        char_result.counterexample.clear();
        break;
      }
    }
  }

  if (mode.exhaustive && mode.reduced) {
    if (n <= 4096) {
      const CayleyTables tables = cayley_tables(ring);
      check_reduced(ring, TableOps{tables}, add_assoc, mul_assoc, left_dist, right_dist, add_comm, star_add,
                    star_mul);
    } else {
      check_reduced(ring, RingOps{ring}, add_assoc, mul_assoc, left_dist, right_dist, add_comm, star_add,
                    star_mul);
    }
    // The reduction is only sound on top of the additive laws; if those fail
    // the multiplicative verdicts are re-derived by sampling.
    if (add_assoc.failed() || add_comm.failed() || star_add.failed() || left_dist.failed() ||
        right_dist.failed()) {
      Checker a1(Axiom::kAddAssociative), m1(Axiom::kMulAssociative), l1(Axiom::kLeftDistributive),
          r1(Axiom::kRightDistributive), c1(Axiom::kAddCommutative), s1(Axiom::kStarAdditive),
          s2(Axiom::kStarAntiMultiplicative);
      check_pairs_and_triples(ring, RingOps{ring}, ValidationMode::sampled(kDefaultSampleCount, mode.seed), a1,
                              m1, l1, r1, c1, s1, s2);
      const std::pair<Checker*, Checker*> pairs[] = {{&add_assoc, &a1}, {&mul_assoc, &m1}, {&left_dist, &l1},
                                                     {&right_dist, &r1}, {&add_comm, &c1}, {&star_add, &s1},
                                                     {&star_mul, &s2}};
      for (auto [reduced, sampled] : pairs)
        if (!reduced->failed() && sampled->failed()) *reduced = std::move(*sampled);
    }
  } else if (n <= 4096 && (mode.exhaustive || mode.samples > static_cast<std::size_t>(n) * n)) {
    // Small rings are checked through materialized tables; the tables are
    // local to this call.
    const CayleyTables tables = cayley_tables(ring);
    check_pairs_and_triples(ring, TableOps{tables}, mode, add_assoc, mul_assoc, left_dist,
                            right_dist, add_comm, star_add, star_mul);
  } else {
    check_pairs_and_triples(ring, RingOps{ring}, mode, add_assoc, mul_assoc, left_dist,
                            right_dist, add_comm, star_add, star_mul);
  }

  ValidationReport report;
  report.ring = ring.name();
  report.mode = mode;
  report.axioms.push_back(add_assoc.take());
  report.axioms.push_back(add_comm.take());
  report.axioms.push_back(add_id.take());
  report.axioms.push_back(add_inv.take());
  report.axioms.push_back(mul_assoc.take());
  report.axioms.push_back(left_dist.take());
  report.axioms.push_back(right_dist.take());
  report.axioms.push_back(star_add.take());
  report.axioms.push_back(star_mul.take());
  report.axioms.push_back(star_inv.take());
  if (ring.has_unity()) {
    report.axioms.push_back(unity_law.take());
    report.axioms.push_back(star_unity.take());
  }
  report.axioms.push_back(std::move(char_result));
  return report;
}

}  // namespace starring
