#include "confalg/table.hpp"

#include "confalg/error.hpp"

namespace confalg {

ProductTable::ProductTable(std::size_t left, std::size_t right, std::size_t out)
    : left_(left), right_(right), out_(out), entries_(left * right * out) {}

Poly& ProductTable::at(std::size_t i, std::size_t j, std::size_t k) {
  if (i >= left_ || j >= right_ || k >= out_) throw InputError("product table index out of range");
  return entries_[(i * right_ + j) * out_ + k];
}

const Poly& ProductTable::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= left_ || j >= right_ || k >= out_) throw InputError("product table index out of range");
  return entries_[(i * right_ + j) * out_ + k];
}

Element ProductTable::entry(std::size_t i, std::size_t j) const {
  Element e(out_);
  for (std::size_t k = 0; k < out_; ++k) e[k] = at(i, j, k);
  return e;
}

void ProductTable::set(std::size_t i, std::size_t j, const Element& value) {
  if (value.size() != out_) throw InputError("product value has the wrong rank");
  for (std::size_t k = 0; k < out_; ++k) at(i, j, k) = value[k];
}

bool ProductTable::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool ProductTable::same_shape(const ProductTable& other) const {
  return left_ == other.left_ && right_ == other.right_ && out_ == other.out_;
}

ProductTable& ProductTable::operator+=(const ProductTable& other) {
  if (!same_shape(other)) throw InputError("product tables have different shapes");
  for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] += other.entries_[n];
  return *this;
}

ProductTable& ProductTable::operator-=(const ProductTable& other) {
  if (!same_shape(other)) throw InputError("product tables have different shapes");
  for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] -= other.entries_[n];
  return *this;
}

ProductTable ProductTable::operator-() const {
  return map([](const Poly& p) { return -p; });
}

ProductTable ProductTable::scaled(const Poly& factor) const {
  return map([&factor](const Poly& p) { return p * factor; });
}

ProductTable ProductTable::map(const std::function<Poly(const Poly&)>& fn) const {
  ProductTable out = *this;
  for (auto& p : out.entries_) p = fn(p);
  return out;
}

ProductTable ProductTable::at_lambda(const Poly& lam) const {
  if (lam.uses(var::d)) throw InputError("lambda argument must not involve d");
  if (lam == Poly::var(var::lm, lam.registry_or_global())) return *this;
  const std::map<VarId, Poly> bind{{var::lm, lam}};
  return map([&bind](const Poly& p) { return p.is_zero() ? p : p.substitute(bind); });
}

ProductTable opposite(const ProductTable& table) {
  ProductTable out(table.right(), table.left(), table.out());
  std::map<VarId, Poly> bind;
  for (std::size_t i = 0; i < table.left(); ++i) {
    for (std::size_t j = 0; j < table.right(); ++j) {
      for (std::size_t k = 0; k < table.out(); ++k) {
        const Poly& p = table.at(i, j, k);
        if (p.is_zero()) continue;
        if (bind.empty()) {
          const auto& reg = p.registry_or_global();
          bind.emplace(var::lm, -Poly::var(var::d, reg) - Poly::var(var::lm, reg));
        }
        out.at(j, i, k) = p.substitute_affine(bind);
      }
    }
  }
  return out;
}

namespace {

Poly shift_d(const Poly& g, const Poly& lam) {
  if (g.is_constant()) return g;
  return g.substitute({{var::d, Poly::var(var::d, g.registry_or_global()) + lam}});
}

Poly eval_d(const Poly& f, const Poly& lam) {
  if (f.is_constant()) return f;
  return f.substitute({{var::d, -lam}});
}

}  // namespace

Element eval_left_basis(const ProductTable& at_lam, std::size_t i, const Element& b,
                        const Poly& lam) {
  if (b.size() != at_lam.right()) throw InputError("right argument has the wrong rank");
  Element out(at_lam.out());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j].is_zero()) continue;
    const Poly g = shift_d(b[j], lam);
    for (std::size_t k = 0; k < at_lam.out(); ++k) {
      const Poly& p = at_lam.at(i, j, k);
      if (!p.is_zero()) out[k] += g * p;
    }
  }
  return out;
}

Element eval_right_basis(const ProductTable& at_lam, const Element& a, std::size_t j,
                         const Poly& lam) {
  if (a.size() != at_lam.left()) throw InputError("left argument has the wrong rank");
  Element out(at_lam.out());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Poly f = eval_d(a[i], lam);
    for (std::size_t k = 0; k < at_lam.out(); ++k) {
      const Poly& p = at_lam.at(i, j, k);
      if (!p.is_zero()) out[k] += f * p;
    }
  }
  return out;
}

Element eval_product(const ProductTable& table, const Element& a, const Element& b,
                     const Poly& lam) {
  if (a.size() != table.left() || b.size() != table.right()) {
    throw InputError("product arguments have the wrong rank");
  }
  const ProductTable t = table.at_lambda(lam);
  Element out(table.out());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Poly f = eval_d(a[i], lam);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const Poly fg = f * shift_d(b[j], lam);
      for (std::size_t k = 0; k < table.out(); ++k) {
        const Poly& p = t.at(i, j, k);
        if (!p.is_zero()) out[k] += fg * p;
      }
    }
  }
  return out;
}

}  // namespace confalg
