#pragma once

#include <array>
#include <map>
#include <string>

#include "confalg/module_map.hpp"

namespace confalg {

/// Element of A (x) A: sum of c_pq(d1, d2) e_p (x) e_q, where d1 and d2 act
/// on the first and second factor. Zero coefficients are never stored.
class TensorElement2 {
 public:
  using Key = std::array<std::size_t, 2>;

  TensorElement2() = default;
  explicit TensorElement2(FreeModule base) : base_(std::move(base)) {}

  const FreeModule& base() const { return base_; }
  const std::map<Key, Poly>& terms() const { return terms_; }
  Poly coeff(std::size_t p, std::size_t q) const;
  /// Adds c * e_p (x) e_q; c may use d1, d2 and parameters only.
  void add(std::size_t p, std::size_t q, const Poly& c);

  bool is_zero() const { return terms_.empty(); }
  TensorElement2 operator+(const TensorElement2& other) const;
  bool operator==(const TensorElement2& other) const = default;

  std::string to_string() const;

 private:
  FreeModule base_;
  std::map<Key, Poly> terms_;
};

/// Element of A (x) A (x) A modulo d1 + d2 + d3: coefficients are stored in
/// d1, d2 only (d3 replaced by -d1-d2).
class TensorElement3 {
 public:
  using Key = std::array<std::size_t, 3>;

  TensorElement3() = default;
  explicit TensorElement3(FreeModule base) : base_(std::move(base)) {}

  const FreeModule& base() const { return base_; }
  const std::map<Key, Poly>& terms() const { return terms_; }
  Poly coeff(std::size_t i, std::size_t j, std::size_t k) const;
  /// Adds c * e_i (x) e_j (x) e_k after reducing c modulo the diagonal.
  void add(std::size_t i, std::size_t j, std::size_t k, const Poly& c);

  bool is_zero() const { return terms_.empty(); }
  /// Reduces every coefficient again; a no-op on stored values.
  TensorElement3 reduced() const;
  bool operator==(const TensorElement3& other) const = default;

  std::string to_string() const;

 private:
  FreeModule base_;
  std::map<Key, Poly> terms_;
};

/// c'_pq(d1, d2) = c_qp(d2, d1).
TensorElement2 flip(const TensorElement2& r);
bool is_symmetric(const TensorElement2& r);

/// A conformal linear map T_lm(v_i) = sum_j at(i, j)(lm, d) e_j.
class ConformalMap {
 public:
  ConformalMap() = default;
  ConformalMap(FreeModule source, FreeModule target);
  /// The lm-independent map with the same matrix.
  static ConformalMap from_module_map(const ModuleMap& t);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  std::size_t rows() const { return source_.rank(); }
  std::size_t cols() const { return target_.rank(); }
  Poly& at(std::size_t i, std::size_t j) { return entries_.at(i * cols() + j); }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

  bool is_zero() const;
  /// Largest lm-degree of an entry.
  int lambda_degree() const;
  /// T_0, the module map obtained at lm = 0.
  ModuleMap at_zero() const;
  bool operator==(const ConformalMap& other) const = default;

  std::string to_string() const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<Poly> entries_;
};

}  // namespace confalg
