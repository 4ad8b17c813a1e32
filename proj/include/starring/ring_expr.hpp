#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace starring {

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

namespace expr {

struct Zmod {
  std::uint64_t modulus;
};

struct GF {
  std::uint64_t prime;
};

struct Mat {
  std::uint32_t size;
  RingExprPtr base;
};

struct Product {
  std::vector<RingExprPtr> factors;
};

struct Unitify {
  RingExprPtr base;
  RingExprPtr scalars;  // always a GF node
};

struct Named {
  std::string identifier;
};

}  // namespace expr

/// AST of the ring-description language. Nodes are immutable and shared.
struct RingExpr {
  using Node = std::variant<expr::Zmod, expr::GF, expr::Mat, expr::Product,
                            expr::Unitify, expr::Named>;
  Node node;

  static RingExprPtr zmod(std::uint64_t m);
  static RingExprPtr gf(std::uint64_t p);
  static RingExprPtr mat(std::uint32_t n, RingExprPtr base);
  static RingExprPtr product(std::vector<RingExprPtr> factors);
  static RingExprPtr unitify(RingExprPtr base, RingExprPtr scalars);
  static RingExprPtr named(std::string identifier);
};

/// Structural equality (deep, not pointer identity).
bool operator==(const RingExpr& a, const RingExpr& b);

/// Renders the expression in the surface syntax accepted by the parser.
std::string to_string(const RingExpr& e);

}  // namespace starring
