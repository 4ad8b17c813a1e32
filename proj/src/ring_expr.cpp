#include "starring/ring_expr.hpp"

#include <type_traits>

#include "starring/error.hpp"

namespace starring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kRingMismatch: return "ring-mismatch";
    case ErrorKind::kNotAnIdeal: return "not-an-ideal";
    case ErrorKind::kMissingCover: return "missing-cover";
    case ErrorKind::kPreconditionViolated: return "precondition-violated";
    case ErrorKind::kUnsupportedScalars: return "unsupported-scalars";
    case ErrorKind::kUnknownTheorem: return "unknown-theorem";
    case ErrorKind::kSubjectKindMismatch: return "subject-kind-mismatch";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kLiteralParse: return "literal-parse";
    case ErrorKind::kEmptyFamily: return "empty-family";
    case ErrorKind::kSyntax: return "syntax";
    case ErrorKind::kUnknownIdentifier: return "unknown-identifier";
    case ErrorKind::kDuplicateName: return "duplicate-name";
  }
  return "unknown";
}

RingExprPtr RingExpr::zmod(std::uint64_t m) {
  return std::make_shared<const RingExpr>(RingExpr{expr::Zmod{m}});
}

RingExprPtr RingExpr::gf(std::uint64_t p) {
  return std::make_shared<const RingExpr>(RingExpr{expr::GF{p}});
}

RingExprPtr RingExpr::mat(std::uint32_t n, RingExprPtr base) {
  return std::make_shared<const RingExpr>(RingExpr{expr::Mat{n, std::move(base)}});
}

RingExprPtr RingExpr::product(std::vector<RingExprPtr> factors) {
  return std::make_shared<const RingExpr>(RingExpr{expr::Product{std::move(factors)}});
}

RingExprPtr RingExpr::unitify(RingExprPtr base, RingExprPtr scalars) {
  return std::make_shared<const RingExpr>(
      RingExpr{expr::Unitify{std::move(base), std::move(scalars)}});
}

RingExprPtr RingExpr::named(std::string identifier) {
  return std::make_shared<const RingExpr>(RingExpr{expr::Named{std::move(identifier)}});
}

namespace {

bool same(const RingExprPtr& a, const RingExprPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

}  // namespace

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, expr::Zmod>) {
          return lhs.modulus == rhs.modulus;
        } else if constexpr (std::is_same_v<T, expr::GF>) {
          return lhs.prime == rhs.prime;
        } else if constexpr (std::is_same_v<T, expr::Mat>) {
          return lhs.size == rhs.size && same(lhs.base, rhs.base);
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          if (lhs.factors.size() != rhs.factors.size()) return false;
          for (std::size_t i = 0; i < lhs.factors.size(); ++i) {
            if (!same(lhs.factors[i], rhs.factors[i])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, expr::Unitify>) {
          return same(lhs.base, rhs.base) && same(lhs.scalars, rhs.scalars);
        } else {
          return lhs.identifier == rhs.identifier;
        }
      },
      a.node);
}

std::string to_string(const RingExpr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Zmod>) {
          return "zmod(" + std::to_string(n.modulus) + ")";
        } else if constexpr (std::is_same_v<T, expr::GF>) {
          return "gf(" + std::to_string(n.prime) + ")";
        } else if constexpr (std::is_same_v<T, expr::Mat>) {
          return "mat(" + std::to_string(n.size) + ", " + to_string(*n.base) + ")";
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          std::string out = "product(";
          for (std::size_t i = 0; i < n.factors.size(); ++i) {
            if (i) out += ", ";
            out += to_string(*n.factors[i]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, expr::Unitify>) {
          return "unitify(" + to_string(*n.base) + ", " + to_string(*n.scalars) + ")";
        } else {
          return n.identifier;
        }
      },
      e.node);
}

}  // namespace starring
