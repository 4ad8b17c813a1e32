#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starring/classification.hpp"
#include "starring/projection.hpp"
#include "starring/ringspec.hpp"
#include "starring/unitification.hpp"

namespace starring {

enum class SubjectKind { kRing, kAction };

/// What a theorem is checked against: a ring, or a scalar action together
/// with its unitification R1. Ring-level theorems on an action subject run
/// on R1. Copies share their caches.
class Subject {
 public:
  static Subject ring(RingPtr ring, std::string name = {}, AnalysisOptions options = {});
  static Subject action(UnitalExtension extension, std::string name = {}, AnalysisOptions options = {});
  /// An action subject when `built` came from unitify, a ring subject otherwise.
  static Subject from(const BuiltRing& built, std::string name = {}, AnalysisOptions options = {});

  SubjectKind kind() const;
  const std::string& name() const;
  /// The ring itself, or R1.
  const RingAnalysis& analysis() const;
  const ClassificationReport& report() const;
  /// The base ring R of an action subject; kSubjectKindMismatch otherwise.
  const RingAnalysis& base_analysis() const;
  const ClassificationReport& base_report() const;
  const UnitalExtension& extension() const;

 private:
  struct State;
  explicit Subject(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::string ring;
  bool applicable = true;
  bool passed = true;
  std::string detail;                      // witness, counterexample or failed hypothesis
  std::vector<std::string> counterexample; // element literals
  double elapsed_ms = 0;

  bool failed() const { return applicable && !passed; }
};

struct TheoremInfo {
  std::string_view id;
  std::string_view statement;
  bool action_level = false;
};

/// Registry order; verify_all runs entries in this order.
std::span<const TheoremInfo> theorem_registry();
const TheoremInfo& theorem_info(std::string_view id);
bool is_theorem_id(std::string_view id);

/// Registry entries that are notes rather than checks.
struct TheoremNote {
  std::string_view id;
  std::string_view note;
};
std::span<const TheoremNote> theorem_notes();

/// Hypotheses first, then the conclusion, every quantifier instantiated over
/// the whole carrier. Throws kUnknownTheorem and kSubjectKindMismatch.
TheoremVerdict verify(std::string_view theorem_id, const Subject& subject);

/// Every entry that fits the subject kind, in registry order. Verdicts are
/// computed on up to `jobs` threads (0 = hardware concurrency).
std::vector<TheoremVerdict> verify_all(const Subject& subject, unsigned jobs = 1);

// ---------------------------------------------------------------------------

/// n = 1: m square-free. n >= 2: n = 2, m square-free and every prime factor
/// of m is 3 mod 4.
bool c031_prediction(std::uint32_t n, std::uint64_t m);

struct C031Row {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t order = 0;
  bool predicted = false;
  std::optional<bool> computed;  // empty when skipped
  bool skipped = false;

  bool agrees() const { return skipped || computed == predicted; }
};

/// Rows for 1 <= n <= n_max and 2 <= m <= m_max, n-major; rings above the
/// bound are marked skipped.
std::vector<C031Row> verify_c031_table(std::uint32_t n_max, std::uint64_t m_max,
                                       std::size_t carrier_bound = kDefaultCarrierBound,
                                       unsigned jobs = 1);

// ---------------------------------------------------------------------------

struct NonunitalFinding {
  std::string name;
  Index order = 0;
  std::vector<std::string> members;  // literals in the parent ring
};

struct NonunitalSearch {
  std::uint64_t order_max = 0;
  std::uint64_t candidates = 0;  // distinct rings examined
  std::uint64_t nonunital = 0;   // of which without unity
  std::vector<NonunitalFinding> findings;
};

inline constexpr std::uint64_t kNonunitalSearchBudget = 16;

/// Enumerates null rings, ideals of Z_m, subrings of small products and
/// star-closed subrings of M2(Z2), M2(Z3) and M2(Z5), all of order <= order_max, and
/// reports the ones without unity that are weakly p.q.-Baer.
/// Throws kBudgetExceeded above kNonunitalSearchBudget.
NonunitalSearch search_nonunital_weakly_pqbaer(std::uint64_t order_max, unsigned jobs = 1);

}  // namespace starring
