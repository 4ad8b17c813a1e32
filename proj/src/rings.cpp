#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "starring/ring.hpp"

namespace starring {
namespace {

class ZmodRing final : public FiniteStarRing {
 public:
  ZmodRing(std::uint64_t m, bool field)
      : FiniteStarRing(field ? "GF(" + std::to_string(m) + ")" : "Z_" + std::to_string(m),
                       static_cast<Index>(m), field ? RingExpr::gf(m) : RingExpr::zmod(m)),
        m_(m) {
    set_unity(Index{1 % static_cast<Index>(m)});
    set_characteristic(m);
  }

  Index add(Index a, Index b) const override { return static_cast<Index>((a + b) % m_); }
  Index neg(Index a) const override { return a == 0 ? 0 : static_cast<Index>(m_ - a); }
  Index mul(Index a, Index b) const override {
    return static_cast<Index>((static_cast<std::uint64_t>(a) * b) % m_);
  }
  Index star(Index a) const override { return a; }

  void write(Index a, std::string& out) const override { out += std::to_string(a); }
  Index read(LiteralCursor& cursor) const override {
    const std::uint64_t v = cursor.read_uint();
    if (v >= m_) cursor.fail("residue " + std::to_string(v) + " not below " + std::to_string(m_));
    return static_cast<Index>(v);
  }

  std::uint64_t modulus() const { return m_; }

 private:
  std::uint64_t m_;
};

std::string matrix_name(std::uint32_t n, const FiniteStarRing& base) {
  return "M_" + std::to_string(n) + "(" + base.name() + ")";
}

class MatrixRing final : public FiniteStarRing {
 public:
  MatrixRing(std::uint32_t n, RingPtr base, Index order)
      : FiniteStarRing(matrix_name(n, *base), order,
                       base->expr() ? RingExpr::mat(n, base->expr()) : nullptr),
        n_(n),
        cells_(n * n),
        base_(std::move(base)) {
    const Index b = base_->order();
    if (const auto* z = dynamic_cast<const ZmodRing*>(base_.get())) modulus_ = z->modulus();
    weights_.resize(cells_);
    Index w = 1;
    for (std::size_t k = cells_; k-- > 0;) {
      weights_[k] = w;
      w *= b;
    }
    entries_.resize(static_cast<std::size_t>(order) * cells_);
    for (Index idx = 0; idx < order; ++idx) {
      Index rest = idx;
      for (std::size_t k = cells_; k-- > 0;) {
        entries_[static_cast<std::size_t>(idx) * cells_ + k] = rest % b;
        rest /= b;
      }
    }
    std::vector<Index> cell(cells_, base_->zero());
    set_zero(encode(cell));
    for (std::uint32_t i = 0; i < n_; ++i) cell[i * n_ + i] = *base_->unity();
    set_unity(encode(cell));
    set_characteristic(base_->characteristic());
  }

  Index add(Index a, Index b) const override {
    const Index* x = entry(a);
    const Index* y = entry(b);
    Index out = 0;
    if (modulus_) {
      for (std::size_t k = 0; k < cells_; ++k) {
        out += static_cast<Index>((x[k] + y[k]) % modulus_) * weights_[k];
      }
    } else {
      for (std::size_t k = 0; k < cells_; ++k) out += base_->add(x[k], y[k]) * weights_[k];
    }
    return out;
  }

  Index neg(Index a) const override {
    const Index* x = entry(a);
    Index out = 0;
    for (std::size_t k = 0; k < cells_; ++k) out += base_->neg(x[k]) * weights_[k];
    return out;
  }

  Index mul(Index a, Index b) const override {
    const Index* x = entry(a);
    const Index* y = entry(b);
    Index out = 0;
    if (modulus_) {
      for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) {
          std::uint64_t acc = 0;
          for (std::uint32_t k = 0; k < n_; ++k) {
            acc += static_cast<std::uint64_t>(x[i * n_ + k]) * y[k * n_ + j];
          }
          out += static_cast<Index>(acc % modulus_) * weights_[i * n_ + j];
        }
      }
      return out;
    }
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (std::uint32_t j = 0; j < n_; ++j) {
        Index acc = base_->zero();
        for (std::uint32_t k = 0; k < n_; ++k) {
          acc = base_->add(acc, base_->mul(x[i * n_ + k], y[k * n_ + j]));
        }
        out += acc * weights_[i * n_ + j];
      }
    }
    return out;
  }

  Index star(Index a) const override {
    const Index* x = entry(a);
    Index out = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (std::uint32_t j = 0; j < n_; ++j) {
        out += base_->star(x[j * n_ + i]) * weights_[i * n_ + j];
      }
    }
    return out;
  }

  void write(Index a, std::string& out) const override {
    const Index* x = entry(a);
    out += '[';
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (i) out += ',';
      out += '[';
      for (std::uint32_t j = 0; j < n_; ++j) {
        if (j) out += ',';
        base_->write(x[i * n_ + j], out);
      }
      out += ']';
    }
    out += ']';
  }

  Index read(LiteralCursor& cursor) const override {
    std::vector<Index> cell(cells_);
    cursor.expect('[');
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (i) cursor.expect(',');
      cursor.expect('[');
      for (std::uint32_t j = 0; j < n_; ++j) {
        if (j) cursor.expect(',');
        cell[i * n_ + j] = base_->read(cursor);
      }
      cursor.expect(']');
    }
    cursor.expect(']');
    return encode(cell);
  }

 private:
  const Index* entry(Index a) const { return &entries_[static_cast<std::size_t>(a) * cells_]; }

  Index encode(const std::vector<Index>& cell) const {
    Index out = 0;
    for (std::size_t k = 0; k < cells_; ++k) out += cell[k] * weights_[k];
    return out;
  }

  std::uint32_t n_;
  std::size_t cells_;
  RingPtr base_;
  std::uint64_t modulus_ = 0;
  std::vector<Index> weights_;
  std::vector<Index> entries_;  // decoded coordinates, order * cells
};

std::string product_name(const std::vector<RingPtr>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i]->name();
  }
  return out;
}

RingExprPtr product_expr(const std::vector<RingPtr>& factors) {
  std::vector<RingExprPtr> parts;
  for (const auto& f : factors) {
    if (!f->expr()) return nullptr;
    parts.push_back(f->expr());
  }
  return RingExpr::product(std::move(parts));
}

class ProductRing final : public FiniteStarRing {
 public:
  ProductRing(std::vector<RingPtr> factors, Index order)
      : FiniteStarRing(product_name(factors), order, product_expr(factors)),
        factors_(std::move(factors)) {
    const std::size_t k = factors_.size();
    weights_.resize(k);
    Index w = 1;
    for (std::size_t i = k; i-- > 0;) {
      weights_[i] = w;
      w *= factors_[i]->order();
    }
    coords_.resize(static_cast<std::size_t>(order) * k);
    for (Index idx = 0; idx < order; ++idx) {
      Index rest = idx;
      for (std::size_t i = k; i-- > 0;) {
        coords_[static_cast<std::size_t>(idx) * k + i] = rest % factors_[i]->order();
        rest /= factors_[i]->order();
      }
    }
    Index zero = 0;
    std::uint64_t characteristic = 1;
    bool unital = true;
    Index unity = 0;
    for (std::size_t i = 0; i < k; ++i) {
      zero += factors_[i]->zero() * weights_[i];
      characteristic = std::lcm(characteristic, factors_[i]->characteristic());
      if (factors_[i]->unity()) {
        unity += *factors_[i]->unity() * weights_[i];
      } else {
        unital = false;
      }
    }
    set_zero(zero);
    set_characteristic(characteristic);
    if (unital) set_unity(unity);
  }

  Index add(Index a, Index b) const override {
    return combine([&](std::size_t i, Index x, Index y) { return factors_[i]->add(x, y); }, a, b);
  }
  Index mul(Index a, Index b) const override {
    return combine([&](std::size_t i, Index x, Index y) { return factors_[i]->mul(x, y); }, a, b);
  }
  Index neg(Index a) const override {
    return combine([&](std::size_t i, Index x, Index) { return factors_[i]->neg(x); }, a, a);
  }
  Index star(Index a) const override {
    return combine([&](std::size_t i, Index x, Index) { return factors_[i]->star(x); }, a, a);
  }

  void write(Index a, std::string& out) const override {
    out += '(';
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += "; ";
      factors_[i]->write(coord(a, i), out);
    }
    out += ')';
  }

  Index read(LiteralCursor& cursor) const override {
    cursor.expect('(');
    Index out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) cursor.expect(';');
      out += factors_[i]->read(cursor) * weights_[i];
    }
    cursor.expect(')');
    return out;
  }

 private:
  Index coord(Index a, std::size_t i) const {
    return coords_[static_cast<std::size_t>(a) * factors_.size() + i];
  }

  template <typename Op>
  Index combine(Op op, Index a, Index b) const {
    Index out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out += op(i, coord(a, i), coord(b, i)) * weights_[i];
    }
    return out;
  }

  std::vector<RingPtr> factors_;
  std::vector<Index> weights_;
  std::vector<Index> coords_;
};

class NullRing final : public FiniteStarRing {
 public:
  explicit NullRing(std::uint64_t m)
      : FiniteStarRing("null(Z_" + std::to_string(m) + ")", static_cast<Index>(m), nullptr),
        m_(m) {
    set_characteristic(m);
    if (m == 1) set_unity(Index{0});
  }

  Index add(Index a, Index b) const override { return static_cast<Index>((a + b) % m_); }
  Index neg(Index a) const override { return a == 0 ? 0 : static_cast<Index>(m_ - a); }
  Index mul(Index, Index) const override { return 0; }
  Index star(Index a) const override { return a; }

  void write(Index a, std::string& out) const override { out += std::to_string(a); }
  Index read(LiteralCursor& cursor) const override {
    const std::uint64_t v = cursor.read_uint();
    if (v >= m_) cursor.fail("residue " + std::to_string(v) + " not below " + std::to_string(m_));
    return static_cast<Index>(v);
  }

 private:
  std::uint64_t m_;
};

class SubRing final : public FiniteStarRing {
 public:
  SubRing(RingPtr parent, std::vector<Index> members, std::string name)
      : FiniteStarRing(std::move(name), static_cast<Index>(members.size()), nullptr),
        parent_(std::move(parent)),
        members_(std::move(members)),
        position_(parent_->order(), kAbsent) {
    for (Index i = 0; i < members_.size(); ++i) position_[members_[i]] = i;
    auto require = [&](Index parent_value, const char* what) {
      if (position_[parent_value] == kAbsent) {
        throw Error(ErrorKind::kInvalidParameter,
                    "subset of " + parent_->name() + " is not closed under " + what);
      }
    };
    require(parent_->zero(), "zero");
    for (const Index a : members_) {
      require(parent_->neg(a), "negation");
      require(parent_->star(a), "involution");
      for (const Index b : members_) {
        require(parent_->add(a, b), "addition");
        require(parent_->mul(a, b), "multiplication");
      }
    }
    set_zero(position_[parent_->zero()]);
    detect_unity();
    detect_characteristic();
  }

  Index add(Index a, Index b) const override { return lift(parent_->add(members_[a], members_[b])); }
  Index neg(Index a) const override { return lift(parent_->neg(members_[a])); }
  Index mul(Index a, Index b) const override { return lift(parent_->mul(members_[a], members_[b])); }
  Index star(Index a) const override { return lift(parent_->star(members_[a])); }

  void write(Index a, std::string& out) const override { parent_->write(members_[a], out); }
  Index read(LiteralCursor& cursor) const override {
    const Index v = parent_->read(cursor);
    if (position_[v] == kAbsent) cursor.fail("element not in subring");
    return position_[v];
  }

 private:
  static constexpr Index kAbsent = ~Index{0};
  Index lift(Index parent_value) const { return position_[parent_value]; }

  RingPtr parent_;
  std::vector<Index> members_;
  std::vector<Index> position_;
};

class TableRing final : public FiniteStarRing {
 public:
  TableRing(std::string name, CayleyTables t)
      : FiniteStarRing(std::move(name), t.order, nullptr), t_(std::move(t)) {
    const std::size_t nn = static_cast<std::size_t>(t_.order) * t_.order;
    if (t_.add.size() != nn || t_.mul.size() != nn || t_.neg.size() != t_.order ||
        t_.star.size() != t_.order || t_.zero >= t_.order) {
      throw Error(ErrorKind::kInvalidParameter, "operation tables have inconsistent sizes");
    }
    auto in_range = [&](const std::vector<Index>& v) {
      return std::all_of(v.begin(), v.end(), [&](Index x) { return x < t_.order; });
    };
    if (!in_range(t_.add) || !in_range(t_.mul) || !in_range(t_.neg) || !in_range(t_.star)) {
      throw Error(ErrorKind::kInvalidParameter, "operation table entry outside the carrier");
    }
    set_zero(t_.zero);
    detect_unity();
    detect_characteristic();
  }

  Index add(Index a, Index b) const override { return t_.add[static_cast<std::size_t>(a) * t_.order + b]; }
  Index neg(Index a) const override { return t_.neg[a]; }
  Index mul(Index a, Index b) const override { return t_.mul[static_cast<std::size_t>(a) * t_.order + b]; }
  Index star(Index a) const override { return t_.star[a]; }

  void write(Index a, std::string& out) const override { out += std::to_string(a); }
  Index read(LiteralCursor& cursor) const override {
    const std::uint64_t v = cursor.read_uint();
    if (v >= t_.order) cursor.fail("index outside the carrier");
    return static_cast<Index>(v);
  }

 private:
  CayleyTables t_;
};

}  // namespace

RingPtr make_zmod(std::uint64_t m, std::size_t carrier_bound) {
  if (m < 2) {
    throw Error(ErrorKind::kInvalidParameter, "zmod modulus must be at least 2, got " + std::to_string(m));
  }
  checked_order_product(1, m, carrier_bound);
  return std::make_shared<ZmodRing>(m, false);
}

RingPtr make_gf(std::uint64_t p, std::size_t carrier_bound) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::kInvalidParameter, "gf argument must be prime, got " + std::to_string(p));
  }
  checked_order_product(1, p, carrier_bound);
  return std::make_shared<ZmodRing>(p, true);
}

RingPtr make_matrix_ring(std::uint32_t n, RingPtr base, std::size_t carrier_bound) {
  if (!base) throw Error(ErrorKind::kInvalidParameter, "matrix ring without a base ring");
  if (n < 1) throw Error(ErrorKind::kInvalidParameter, "matrix size must be at least 1");
  if (!base->has_unity()) {
    throw Error(ErrorKind::kInvalidParameter, "matrix ring base " + base->name() + " has no unity");
  }
  std::uint64_t order = 1;
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(n) * n; ++k) {
    order = checked_order_product(order, base->order(), carrier_bound);
  }
  const auto report = validate_axioms(*base, ValidationMode::automatic(base->order()));
  if (!report.passed()) {
    throw Error(ErrorKind::kInvalidParameter, "matrix ring base " + base->name() + " fails axiom validation");
  }
  return std::make_shared<MatrixRing>(n, std::move(base), static_cast<Index>(order));
}

RingPtr make_product(std::vector<RingPtr> factors, std::size_t carrier_bound) {
  if (factors.size() < 2) throw Error(ErrorKind::kInvalidParameter, "product needs at least two factors");
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    if (!f) throw Error(ErrorKind::kInvalidParameter, "null product factor");
    order = checked_order_product(order, f->order(), carrier_bound);
  }
  return std::make_shared<ProductRing>(std::move(factors), static_cast<Index>(order));
}

RingPtr make_null_ring(std::uint64_t m) {
  if (m < 1) throw Error(ErrorKind::kInvalidParameter, "null ring needs a positive modulus");
  return std::make_shared<NullRing>(m);
}

RingPtr make_subring(RingPtr parent, std::vector<Index> members, std::string name) {
  if (!parent) throw Error(ErrorKind::kInvalidParameter, "subring without a parent ring");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.back() >= parent->order()) {
    throw Error(ErrorKind::kInvalidParameter, "subring members outside the parent carrier");
  }
  return std::make_shared<SubRing>(std::move(parent), std::move(members), std::move(name));
}

RingPtr make_table_ring(std::string name, CayleyTables tables) {
  return std::make_shared<TableRing>(std::move(name), std::move(tables));
}

}  // namespace starring
