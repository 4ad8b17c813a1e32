#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "starring/classification.hpp"
#include "starring/theorems.hpp"
#include "starring/unitification.hpp"

namespace starring {

using Json = nlohmann::ordered_json;

struct ReportConfig {
  std::uint64_t seed = kDefaultSampleSeed;
  std::size_t bound = kDefaultCarrierBound;
  /// Element-to-projection maps in full instead of their distinct targets.
  bool full_witnesses = false;
};

std::string format_seed(std::uint64_t seed);
Json config_json(const ReportConfig& config);

/// {ring, expr, order, config, verdicts, witnesses, timing_ms}; timing_ms is
/// null unless a time is given, so equal configs give byte-identical output.
Json classification_json(const std::string& name, const FiniteStarRing& ring, const ClassificationReport& report,
                         const ReportConfig& config, std::optional<double> timing_ms = std::nullopt);

/// Verdicts keyed by theorem id, counterexamples under witnesses, plus a
/// summary. With `timing`, timing_ms holds the total and every verdict's time.
Json verdicts_json(const std::string& name, const FiniteStarRing& ring, const std::vector<TheoremVerdict>& verdicts,
                   const ReportConfig& config, std::optional<double> total_ms = std::nullopt);

Json validation_json(const std::string& name, const FiniteStarRing& ring, const ValidationReport& report,
                     const ReportConfig& config, std::optional<double> timing_ms = std::nullopt);

Json projections_json(const std::string& name, const RingAnalysis& analysis, const ReportConfig& config,
                      std::optional<double> timing_ms = std::nullopt);

Json cover_json(const std::string& name, const RingAnalysis& analysis, Index x, const ReportConfig& config,
                std::optional<double> timing_ms = std::nullopt);

struct UnitificationCheck {
  ActionReport laws;
  ConditionIII condition;
  TorsionReport torsion;
  std::vector<TheoremVerdict> verdicts;  // the action-level theorems
};

UnitificationCheck check_unitification(const Subject& subject);

Json unitification_json(const std::string& name, const Subject& subject, const UnitificationCheck& check,
                        const ReportConfig& config, std::optional<double> timing_ms = std::nullopt);

Json c031_json(const std::vector<C031Row>& rows, const ReportConfig& config,
               std::optional<double> timing_ms = std::nullopt);

Json search_json(const NonunitalSearch& search, const ReportConfig& config,
                 std::optional<double> timing_ms = std::nullopt);

}  // namespace starring
