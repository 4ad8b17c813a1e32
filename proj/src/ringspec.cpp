#include "starring/ringspec.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace starring {

namespace {

std::string describe(std::size_t line, std::size_t column, const std::string& message,
                     const std::vector<std::string>& expected) {
  std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += (i + 1 == expected.size()) ? " or " : ", ";
      out += expected[i];
    }
  }
  return out;
}

const std::set<std::string, std::less<>> kKeywords = {"ring", "zmod", "gf", "mat", "product", "unitify"};
const std::vector<std::string> kExprStart = {"zmod", "gf", "mat", "product", "unitify", "identifier"};

enum class Tok { kIdent, kInt, kLParen, kRParen, kComma, kEquals, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        t.text += advance();
      t.kind = Tok::kIdent;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
      t.kind = Tok::kInt;
      return t;
    }
    t.text = std::string(1, advance());
    switch (c) {
      case '(': t.kind = Tok::kLParen; return t;
      case ')': t.kind = Tok::kRParen; return t;
      case ',': t.kind = Tok::kComma; return t;
      case '=': t.kind = Tok::kEquals; return t;
      default: break;
    }
    throw SpecError(ErrorKind::kSyntax, t.line, t.column, {}, "unexpected character '" + t.text + "'");
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string token_name(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kIdent: return "'" + t.text + "'";
    case Tok::kInt: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { cur_ = lexer_.next(); }

  std::vector<RingDefinition> file() {
    std::vector<RingDefinition> defs;
    std::set<std::string, std::less<>> names;
    while (cur_.kind != Tok::kEnd) {
      if (cur_.kind != Tok::kIdent || cur_.text != "ring") fail({"'ring'", "end of input"});
      const std::size_t line = cur_.line;
      bump();
      if (cur_.kind != Tok::kIdent || kKeywords.contains(cur_.text)) fail({"ring name"});
      const Token name = cur_;
      if (names.contains(name.text)) {
        throw SpecError(ErrorKind::kDuplicateName, name.line, name.column, {},
                        "ring '" + name.text + "' is already defined");
      }
      bump();
      expect(Tok::kEquals, "'='");
      known_ = &names;
      RingExprPtr e = expr();
      names.insert(name.text);
      defs.push_back({name.text, std::move(e), line});
    }
    return defs;
  }

  RingExprPtr single() {
    RingExprPtr e = expr();
    if (cur_.kind != Tok::kEnd) fail({"end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw SpecError(ErrorKind::kSyntax, cur_.line, cur_.column, expected,
                    describe(cur_.line, cur_.column, "unexpected " + token_name(cur_), expected));
  }
  [[noreturn]] void fail_at(ErrorKind kind, const Token& t, const std::string& message) {
    throw SpecError(kind, t.line, t.column, {}, describe(t.line, t.column, message, {}));
  }
  void bump() { cur_ = lexer_.next(); }
  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail({what});
    bump();
  }

  std::uint64_t integer() {
    if (cur_.kind != Tok::kInt) fail({"integer"});
    std::uint64_t v = 0;
    const auto* first = cur_.text.data();
    const auto [ptr, ec] = std::from_chars(first, first + cur_.text.size(), v);
    if (ec != std::errc() || ptr != first + cur_.text.size()) {
      fail_at(ErrorKind::kInvalidParameter, cur_, "integer " + cur_.text + " is out of range");
    }
    last_int_ = cur_;
    bump();
    return v;
  }

  RingExprPtr expr() {
    if (cur_.kind != Tok::kIdent || cur_.text == "ring") fail(kExprStart);
    const Token head = cur_;
    bump();
    if (head.text == "zmod") {
      expect(Tok::kLParen, "'('");
      const std::uint64_t m = integer();
      if (m < 2) fail_at(ErrorKind::kInvalidParameter, last_int_, "zmod modulus must be at least 2, got " + last_int_.text);
      expect(Tok::kRParen, "')'");
      return RingExpr::zmod(m);
    }
    if (head.text == "gf") {
      expect(Tok::kLParen, "'('");
      const std::uint64_t p = integer();
      if (!is_prime(p)) fail_at(ErrorKind::kInvalidParameter, last_int_, "gf order " + last_int_.text + " is not prime");
      expect(Tok::kRParen, "')'");
      return RingExpr::gf(p);
    }
    if (head.text == "mat") {
      expect(Tok::kLParen, "'('");
      const std::uint64_t n = integer();
      if (n < 1 || n > 64) fail_at(ErrorKind::kInvalidParameter, last_int_, "matrix size must be between 1 and 64, got " + last_int_.text);
      expect(Tok::kComma, "','");
      RingExprPtr base = expr();
      expect(Tok::kRParen, "')'");
      return RingExpr::mat(static_cast<std::uint32_t>(n), std::move(base));
    }
    if (head.text == "product") {
      expect(Tok::kLParen, "'('");
      std::vector<RingExprPtr> factors;
      factors.push_back(expr());
      if (cur_.kind != Tok::kComma) fail({"','"});
      while (cur_.kind == Tok::kComma) {
        bump();
        factors.push_back(expr());
      }
      expect(Tok::kRParen, "')' or ','");
      return RingExpr::product(std::move(factors));
    }
    if (head.text == "unitify") {
      expect(Tok::kLParen, "'('");
      RingExprPtr base = expr();
      expect(Tok::kComma, "','");
      const Token scalars_at = cur_;
      RingExprPtr scalars = expr();
      if (!std::holds_alternative<expr::GF>(scalars->node)) {
        fail_at(ErrorKind::kUnsupportedScalars, scalars_at, "unitify scalars must be gf(p)");
      }
      expect(Tok::kRParen, "')'");
      return RingExpr::unitify(std::move(base), std::move(scalars));
    }
    if (known_ && !known_->contains(head.text)) {
      fail_at(ErrorKind::kUnknownIdentifier, head, "unknown ring '" + head.text + "'");
    }
    return RingExpr::named(head.text);
  }

  Lexer lexer_;
  Token cur_;
  Token last_int_;
  const std::set<std::string, std::less<>>* known_ = nullptr;
};

}  // namespace

SpecError::SpecError(ErrorKind kind, std::size_t line, std::size_t column, std::vector<std::string> expected,
                     const std::string& message)
    : Error(kind, message.rfind("line ", 0) == 0 ? message : describe(line, column, message, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

std::vector<RingDefinition> parse_ringspec(std::string_view source) { return Parser(source).file(); }

RingExprPtr parse_ring_expr(std::string_view source) { return Parser(source).single(); }

std::string format_ringspec(const std::vector<RingDefinition>& defs) {
  std::string out;
  for (const auto& d : defs) out += "ring " + d.name + " = " + to_string(*d.expr) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Lookup>
BuiltRing build_with(const RingExpr& e, std::size_t bound, Lookup&& lookup) {
  auto sub = [&](const RingExprPtr& x) { return build_with(*x, bound, lookup).ring; };
  return std::visit(
      [&](const auto& node) -> BuiltRing {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::Zmod>) {
          return {make_zmod(node.modulus, bound), std::nullopt};
        } else if constexpr (std::is_same_v<T, expr::GF>) {
          return {make_gf(node.prime, bound), std::nullopt};
        } else if constexpr (std::is_same_v<T, expr::Mat>) {
          return {make_matrix_ring(node.size, sub(node.base), bound), std::nullopt};
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          std::vector<RingPtr> factors;
          for (const auto& f : node.factors) factors.push_back(sub(f));
          return {make_product(std::move(factors), bound), std::nullopt};
        } else if constexpr (std::is_same_v<T, expr::Unitify>) {
          const auto* gf = std::get_if<expr::GF>(&node.scalars->node);
          if (!gf) throw Error(ErrorKind::kUnsupportedScalars, "unitify scalars must be gf(p)");
          UnitalExtension ext = unitify(natural_scalar_action(sub(node.base), gf->prime), bound);
          RingPtr ring = ext.ring();
          return {std::move(ring), std::move(ext)};
        } else {
          return lookup(node.identifier);
        }
      },
      e.node);
}

}  // namespace

BuiltRing build_ring(const RingExpr& expr, std::size_t carrier_bound) {
  return build_with(expr, carrier_bound, [](const std::string& name) -> BuiltRing {
    throw Error(ErrorKind::kUnknownIdentifier, "unknown ring '" + name + "'");
  });
}

RingEnvironment::RingEnvironment(std::vector<RingDefinition> defs, std::size_t carrier_bound)
    : defs_(std::move(defs)), bound_(carrier_bound) {}

bool RingEnvironment::contains(std::string_view name) const {
  for (const auto& d : defs_)
    if (d.name == name) return true;
  return false;
}

const BuiltRing& RingEnvironment::get(std::string_view name) {
  if (auto it = built_.find(name); it != built_.end()) return it->second;
  for (const auto& d : defs_) {
    if (d.name != name) continue;
    BuiltRing b = build(*d.expr);
    return built_.emplace(d.name, std::move(b)).first->second;
  }
  throw Error(ErrorKind::kUnknownIdentifier, "unknown ring '" + std::string(name) + "'");
}

BuiltRing RingEnvironment::build(const RingExpr& expr) {
  return build_with(expr, bound_, [this](const std::string& name) { return get(name); });
}

}  // namespace starring
