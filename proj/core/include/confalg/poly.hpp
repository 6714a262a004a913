#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confalg/var_registry.hpp"

namespace confalg {

using Rational = mpq_class;

/// Exponent vector indexed by VarId, trailing zeros trimmed. Negative
/// exponents are permitted for parameter variables only; they appear when a
/// determinant that is a parameter monomial (such as 2*a^2) is inverted.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId id, int exponent = 1);

  int exponent(VarId id) const { return id < exps_.size() ? exps_[id] : 0; }
  int total_degree() const;
  bool is_one() const { return exps_.empty(); }
  std::size_t width() const { return exps_.size(); }
  const std::vector<std::int16_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  /// Drops the listed variable (sets its exponent to zero).
  Monomial without(VarId id) const;

  /// Graded lexicographic comparison: total degree first, then the exponent
  /// of the lowest VarId, and so on.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  void trim();
  std::vector<std::int16_t> exps_;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over Q in the variables of a VarRegistry. Terms are
/// kept sorted in descending graded-lex order with nonzero coefficients, so
/// structural equality is polynomial equality.
///
/// A Poly remembers its registry. Constants built without one combine with
/// any registry; mixing two different registries throws InputError.
class Poly {
 public:
  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Poly var(VarId id, const VarRegistry& reg = VarRegistry::global());
  static Poly var(std::string_view name, const VarRegistry& reg = VarRegistry::global());
  static Poly term(const Rational& coeff, Monomial mono,
                   const VarRegistry& reg = VarRegistry::global());
  /// Builds from an arbitrary list of terms; duplicates are combined.
  static Poly from_terms(std::vector<Term> terms, const VarRegistry* reg);

  const std::vector<Term>& terms() const { return terms_; }
  const VarRegistry* registry() const { return reg_; }
  const VarRegistry& registry_or_global() const { return reg_ ? *reg_ : VarRegistry::global(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  int degree_in(VarId id) const;
  int total_degree() const;
  bool uses(VarId id) const;
  bool uses_role(VarRole role) const;
  std::vector<VarId> variables() const;
  /// True when every variable has a nonnegative exponent.
  bool is_polynomial() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& other) const;

  Poly scaled(const Rational& factor) const;
  Poly pow(unsigned n) const;

  /// Simultaneous substitution of variables by polynomials. Parameters may
  /// be bound here (used to instantiate families); a parameter with a
  /// negative exponent can only be bound to a nonzero constant.
  Poly substitute(const std::map<VarId, Poly>& bindings) const;
  /// Simultaneous affine substitution of derivation/lambda variables.
  /// Throws InputError if a parameter is bound or an image is not affine.
  Poly substitute_affine(const std::map<VarId, Poly>& bindings) const;
  /// Representative modulo the ideal (d1 + d2 + d3): d3 is replaced by -d1-d2.
  Poly reduce_mod_diagonal() const;

  /// Splits into coefficients with respect to the monomials in `vars`:
  /// p = sum_m m * coeff[m], where coeff[m] does not use `vars`.
  std::map<Monomial, Poly> coefficients_in(const std::vector<VarId>& vars) const;

  /// Evaluates all variables listed in `values`, leaving others symbolic.
  Poly evaluate(const std::map<VarId, Rational>& values) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize();
  void adopt_registry(const Poly& other);

  const VarRegistry* reg_ = nullptr;
  std::vector<Term> terms_;
};

std::string to_string(const Rational& q);

}  // namespace confalg

template <>
struct std::hash<confalg::Poly> {
  std::size_t operator()(const confalg::Poly& p) const { return p.hash(); }
};
