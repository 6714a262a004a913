#pragma once

#include <functional>
#include <vector>

#include "confalg/element.hpp"

namespace confalg {

/// Structure constants of a lambda-product between two free modules:
/// x_i o_lm y_j = sum_k P(i,j,k)(lm, d) z_k. Entries are polynomials in lm, d
/// and parameters.
class ProductTable {
 public:
  ProductTable() = default;
  ProductTable(std::size_t left, std::size_t right, std::size_t out);
  static ProductTable square(std::size_t n) { return ProductTable(n, n, n); }

  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }
  std::size_t out() const { return out_; }

  Poly& at(std::size_t i, std::size_t j, std::size_t k);
  const Poly& at(std::size_t i, std::size_t j, std::size_t k) const;
  Element entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Element& value);

  bool is_zero() const;
  bool same_shape(const ProductTable& other) const;
  ProductTable& operator+=(const ProductTable& other);
  ProductTable& operator-=(const ProductTable& other);
  friend ProductTable operator+(ProductTable a, const ProductTable& b) { return a += b; }
  friend ProductTable operator-(ProductTable a, const ProductTable& b) { return a -= b; }
  ProductTable operator-() const;
  ProductTable scaled(const Poly& factor) const;
  ProductTable map(const std::function<Poly(const Poly&)>& fn) const;
  bool operator==(const ProductTable& other) const = default;

  /// Entries with lm replaced by `lam` (lam must not involve d).
  ProductTable at_lambda(const Poly& lam) const;

 private:
  std::size_t left_ = 0, right_ = 0, out_ = 0;
  std::vector<Poly> entries_;
};

/// The opposite product: opp(i,j) = P(j,i) with lm -> -d - lm, that is
/// y o_{-d-lm} x for basis elements.
ProductTable opposite(const ProductTable& table);

/// Evaluates a o_lam b for arbitrary elements by sesquilinearity:
/// sum_{i,j,k} f_i(-lam) g_j(d + lam) P(i,j,k)(lam, d) z_k.
/// `lam` may be any polynomial free of d (a fresh lambda variable or a sum
/// of them); other variables live in a and b are carried along untouched.
Element eval_product(const ProductTable& table, const Element& a, const Element& b,
                     const Poly& lam);

/// Variants that take a table already specialised with at_lambda(lam).
/// They skip the substitution in the table entries.
Element eval_left_basis(const ProductTable& at_lam, std::size_t i, const Element& b,
                        const Poly& lam);
Element eval_right_basis(const ProductTable& at_lam, const Element& a, std::size_t j,
                         const Poly& lam);

}  // namespace confalg
