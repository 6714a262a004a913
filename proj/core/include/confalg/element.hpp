#pragma once

#include <string>
#include <vector>

#include "confalg/poly.hpp"

namespace confalg {

/// A free C[d]-module of finite rank, described by its basis names.
struct FreeModule {
  std::vector<std::string> basis;

  FreeModule() = default;
  explicit FreeModule(std::vector<std::string> names);
  /// Basis e1..en.
  static FreeModule numbered(std::size_t rank, const std::string& prefix = "e");
  /// Rank one with an unnamed generator; used to report scalar residuals.
  static FreeModule scalar() { return FreeModule(std::vector<std::string>{""}); }

  std::size_t rank() const { return basis.size(); }
  std::size_t index_of(const std::string& name) const;
  /// Concatenation of two bases (the underlying module of a direct sum).
  /// Names of `other` that clash are primed: A + A has basis a, a'.
  FreeModule direct_sum(const FreeModule& other) const;
  /// Dual basis, each name suffixed with '*'.
  FreeModule dual() const;
  bool operator==(const FreeModule&) const = default;
};

/// Coefficient vector sum_i coeffs[i] * e_i; coefficients are polynomials in
/// d (acting on the element), live lambda variables and parameters.
struct Element {
  std::vector<Poly> coeffs;

  Element() = default;
  explicit Element(std::size_t rank) : coeffs(rank) {}
  explicit Element(std::vector<Poly> c) : coeffs(std::move(c)) {}
  static Element basis(std::size_t rank, std::size_t i);

  std::size_t size() const { return coeffs.size(); }
  Poly& operator[](std::size_t i) { return coeffs[i]; }
  const Poly& operator[](std::size_t i) const { return coeffs[i]; }

  bool is_zero() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  Element scaled(const Poly& factor) const;
  bool operator==(const Element& other) const = default;

  Element substitute(const std::map<VarId, Poly>& bindings) const;
  Element substitute_affine(const std::map<VarId, Poly>& bindings) const;

  /// Renders as "c1*e1 + c2*e2" using the module's basis names.
  std::string to_string(const FreeModule& module) const;
};

}  // namespace confalg
