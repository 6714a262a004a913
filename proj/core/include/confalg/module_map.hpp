#pragma once

#include <string>
#include <vector>

#include "confalg/element.hpp"

namespace confalg {

/// A d-linear map given by its matrix over polynomials in d (and
/// parameters): T(v_i) = sum_j at(i, j) e_j. Composition and inversion
/// follow from this row convention.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(FreeModule source, FreeModule target);
  static ModuleMap identity(const FreeModule& m);
  static ModuleMap zero(const FreeModule& source, const FreeModule& target);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  std::size_t rows() const { return source_.rank(); }
  std::size_t cols() const { return target_.rank(); }

  Poly& at(std::size_t i, std::size_t j) { return entries_.at(i * cols() + j); }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }
  /// Image of the i-th source basis element.
  Element image(std::size_t i) const;
  /// T applied to an element; coefficient polynomials multiply the matrix
  /// rows, lambda variables act as scalars.
  Element apply(const Element& v) const;

  bool is_zero() const;
  bool is_square() const { return rows() == cols(); }
  ModuleMap operator+(const ModuleMap& other) const;
  ModuleMap operator-(const ModuleMap& other) const;
  ModuleMap scaled(const Poly& factor) const;
  /// this after `first`: x -> this(first(x)).
  ModuleMap after(const ModuleMap& first) const;
  ModuleMap substitute(const std::map<VarId, Poly>& bindings) const;
  bool operator==(const ModuleMap& other) const;

  /// Determinant by cofactor expansion (square maps only).
  Poly determinant() const;
  /// Adjugate divided by the determinant. The determinant must be a unit:
  /// a nonzero constant, or for generic parameters a single parameter
  /// monomial; in the latter case `genericity` receives the condition.
  ModuleMap inverse(std::string* genericity = nullptr) const;

  std::string to_string() const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<Poly> entries_;
};

enum class Invertibility { invertible, generic, singular };

/// Classifies a determinant: nonzero constants are units; a single term in
/// parameters only is a unit for generic parameter values.
Invertibility classify_unit(const Poly& det);

}  // namespace confalg
