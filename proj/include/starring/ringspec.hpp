#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starring/error.hpp"
#include "starring/ring.hpp"
#include "starring/ring_expr.hpp"
#include "starring/unitification.hpp"

namespace starring {

/// A ringspec diagnostic: 1-based position plus the tokens that would have
/// been accepted there.
class SpecError : public Error {
 public:
  SpecError(ErrorKind kind, std::size_t line, std::size_t column, std::vector<std::string> expected,
            const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

struct RingDefinition {
  std::string name;
  RingExprPtr expr;
  std::size_t line = 0;
};

/// file := ("ring" IDENT "=" expr)* with "#" comments. Names must be unique
/// and may only refer to earlier definitions.
std::vector<RingDefinition> parse_ringspec(std::string_view source);

/// A single expression; Named nodes are left unresolved.
RingExprPtr parse_ring_expr(std::string_view source);

/// One "ring NAME = expr" line per definition; parse_ringspec inverts it.
std::string format_ringspec(const std::vector<RingDefinition>& defs);

/// A constructed ring; unitifications keep their scalar action.
struct BuiltRing {
  RingPtr ring;
  std::optional<UnitalExtension> extension;
};

/// Builds rings from a parsed file, memoizing every definition.
class RingEnvironment {
 public:
  explicit RingEnvironment(std::vector<RingDefinition> defs,
                           std::size_t carrier_bound = kDefaultCarrierBound);

  const std::vector<RingDefinition>& definitions() const { return defs_; }
  bool contains(std::string_view name) const;
  const BuiltRing& get(std::string_view name);
  BuiltRing build(const RingExpr& expr);

 private:
  std::vector<RingDefinition> defs_;
  std::size_t bound_;
  std::map<std::string, BuiltRing, std::less<>> built_;
};

/// Builds a closed expression (no Named nodes).
BuiltRing build_ring(const RingExpr& expr, std::size_t carrier_bound = kDefaultCarrierBound);

}  // namespace starring
