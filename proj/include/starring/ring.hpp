#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starring/error.hpp"
#include "starring/ring_expr.hpp"

namespace starring {

/// Canonical carrier coordinate, encoded as a mixed-radix integer.
/// Index order is the canonical element order used for every sorted output.
using Index = std::uint32_t;

inline constexpr std::size_t kDefaultCarrierBound = 20000;
inline constexpr std::size_t kDefaultExhaustiveLimit = 2000;
inline constexpr std::size_t kDefaultSampleCount = 100000;
inline constexpr std::uint64_t kDefaultSampleSeed = 0xA15E;

class FiniteStarRing;
using RingPtr = std::shared_ptr<const FiniteStarRing>;

/// A handle to one element of one ring. Arithmetic between elements of
/// different rings throws ErrorKind::kRingMismatch.
class Element {
 public:
  Element(RingPtr ring, Index index);

  const FiniteStarRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  Index index() const { return index_; }

  Element star() const;
  bool is_zero() const;
  std::string to_string() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);

  friend bool operator==(const Element& a, const Element& b) {
    return a.ring_ == b.ring_ && a.index_ == b.index_;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.index_ <=> b.index_;
  }

 private:
  RingPtr ring_;
  Index index_;
};

void require_same_ring(const Element& a, const Element& b);

/// Reads element literals: decimal integers, "[[a,b],[c,d]]" matrices,
/// "(x; y)" tuples and "(a | s)" unitification pairs.
class LiteralCursor {
 public:
  explicit LiteralCursor(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  char peek();
  bool consume(char c);
  void expect(char c);
  std::uint64_t read_uint();
  [[noreturn]] void fail(const std::string& what) const;
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// A finite ring with involution over an explicitly indexed carrier
/// {0, ..., order-1}. Instances are immutable once constructed and may be
/// shared freely between threads.
class FiniteStarRing : public std::enable_shared_from_this<FiniteStarRing> {
 public:
  virtual ~FiniteStarRing() = default;
  FiniteStarRing(const FiniteStarRing&) = delete;
  FiniteStarRing& operator=(const FiniteStarRing&) = delete;

  const std::string& name() const { return name_; }
  Index order() const { return order_; }
  Index zero() const { return zero_; }
  const std::optional<Index>& unity() const { return unity_; }
  bool has_unity() const { return unity_.has_value(); }
  std::uint64_t characteristic() const { return characteristic_; }
  /// Construction provenance; null for rings built outside the DSL.
  const RingExprPtr& expr() const { return expr_; }

  virtual Index add(Index a, Index b) const = 0;
  virtual Index neg(Index a) const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  virtual Index star(Index a) const = 0;

  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  /// k-fold sum a + ... + a.
  Index scale(std::uint64_t k, Index a) const;

  std::string format(Index a) const;
  virtual void write(Index a, std::string& out) const = 0;
  /// Parses one literal from the cursor (used for nested literals).
  virtual Index read(LiteralCursor& cursor) const = 0;
  /// Parses a complete literal; trailing input is an error.
  Index parse(std::string_view literal) const;

  Element element(Index a) const;
  Element parse_element(std::string_view literal) const;

  /// Every carrier element exactly once, in canonical order.
  auto elements() const {
    return std::views::iota(Index{0}, order_) |
           std::views::transform([self = shared_from_this()](Index i) {
             return Element(self, i);
           });
  }

 protected:
  FiniteStarRing(std::string name, Index order, RingExprPtr expr);

  void set_zero(Index z) { zero_ = z; }
  void set_unity(std::optional<Index> u) { unity_ = u; }
  void set_characteristic(std::uint64_t c) { characteristic_ = c; }
  /// Scans the carrier for a two-sided identity and for the additive
  /// exponent. Only valid once the derived object is fully usable.
  void detect_unity();
  void detect_characteristic();

 private:
  std::string name_;
  Index order_;
  Index zero_ = 0;
  std::optional<Index> unity_;
  std::uint64_t characteristic_ = 1;
  RingExprPtr expr_;
};

bool is_prime(std::uint64_t n);
std::uint64_t checked_order_product(std::uint64_t a, std::uint64_t b,
                                    std::size_t carrier_bound);

RingPtr make_zmod(std::uint64_t m, std::size_t carrier_bound = kDefaultCarrierBound);
RingPtr make_gf(std::uint64_t p, std::size_t carrier_bound = kDefaultCarrierBound);
/// n x n matrices over a unital base ring; involution is entrywise base
/// involution followed by transpose.
RingPtr make_matrix_ring(std::uint32_t n, RingPtr base,
                         std::size_t carrier_bound = kDefaultCarrierBound);
RingPtr make_product(std::vector<RingPtr> factors,
                     std::size_t carrier_bound = kDefaultCarrierBound);
/// Additive group Z_m with identically zero multiplication.
RingPtr make_null_ring(std::uint64_t m);
/// The subset `members` of `parent`, which must contain zero and be closed
/// under addition, negation, multiplication and involution.
RingPtr make_subring(RingPtr parent, std::vector<Index> members, std::string name);

struct CayleyTables {
  Index order = 0;
  Index zero = 0;
  std::vector<Index> add;  // order * order, row-major
  std::vector<Index> mul;  // order * order, row-major
  std::vector<Index> neg;  // order
  std::vector<Index> star; // order
};

/// A ring given by explicit operation tables. Nothing is validated; this is
/// how malformed structures are fed to validate_axioms.
RingPtr make_table_ring(std::string name, CayleyTables tables);
/// Materializes the operation tables of any ring.
CayleyTables cayley_tables(const FiniteStarRing& ring);

// ---------------------------------------------------------------------------
// Axiom validation

enum class Axiom {
  kAddAssociative,
  kAddCommutative,
  kAddIdentity,
  kAddInverse,
  kMulAssociative,
  kLeftDistributive,
  kRightDistributive,
  kStarAdditive,
  kStarAntiMultiplicative,
  kStarInvolutive,
  kUnityLaw,
  kStarUnity,
  kCharacteristic,
};

std::string_view to_string(Axiom axiom);

struct ValidationMode {
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSampleSeed;
  /// With `exhaustive`: decide each law completely while letting its last
  /// argument range over additive generators only. Once associativity of +
  /// and distributivity hold, every remaining law is additive in that
  /// argument, so this is a full decision at O(order^2 log order) cost.
  bool reduced = false;

  static ValidationMode full() { return {true, 0, kDefaultSampleSeed, false}; }
  static ValidationMode complete() { return {true, 0, kDefaultSampleSeed, true}; }
  static ValidationMode sampled(std::size_t k, std::uint64_t seed = kDefaultSampleSeed) {
    return {false, k, seed, false};
  }
  /// Exhaustive up to kDefaultExhaustiveLimit elements, sampled above.
  static ValidationMode automatic(Index order, std::uint64_t seed = kDefaultSampleSeed);
};

struct AxiomResult {
  Axiom axiom;
  bool passed = true;
  std::vector<Index> counterexample;  // the failing tuple, empty on success
  std::uint64_t checked = 0;          // tuples examined
};

struct ValidationReport {
  std::string ring;
  ValidationMode mode;
  std::vector<AxiomResult> axioms;

  bool passed() const;
  const AxiomResult& result(Axiom axiom) const;
};

ValidationReport validate_axioms(const FiniteStarRing& ring, ValidationMode mode);

}  // namespace starring
