#include "confalg/module_map.hpp"

#include <sstream>

#include "confalg/error.hpp"

namespace confalg {

ModuleMap::ModuleMap(FreeModule source, FreeModule target)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(source_.rank() * target_.rank()) {}

ModuleMap ModuleMap::identity(const FreeModule& m) {
  ModuleMap out(m, m);
  for (std::size_t i = 0; i < m.rank(); ++i) out.at(i, i) = Poly(1L);
  return out;
}

ModuleMap ModuleMap::zero(const FreeModule& source, const FreeModule& target) {
  return ModuleMap(source, target);
}

Element ModuleMap::image(std::size_t i) const {
  Element e(cols());
  for (std::size_t j = 0; j < cols(); ++j) e[j] = at(i, j);
  return e;
}

Element ModuleMap::apply(const Element& v) const {
  if (v.size() != rows()) throw InputError("map applied to an element of the wrong rank");
  Element out(cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!at(i, j).is_zero()) out[j] += v[i] * at(i, j);
    }
  }
  return out;
}

bool ModuleMap::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

ModuleMap ModuleMap::operator+(const ModuleMap& other) const {
  if (rows() != other.rows() || cols() != other.cols()) throw InputError("map shapes differ");
  ModuleMap out = *this;
  for (std::size_t n = 0; n < entries_.size(); ++n) out.entries_[n] += other.entries_[n];
  return out;
}

ModuleMap ModuleMap::operator-(const ModuleMap& other) const {
  return *this + other.scaled(Poly(-1L));
}

ModuleMap ModuleMap::scaled(const Poly& factor) const {
  ModuleMap out = *this;
  for (auto& p : out.entries_) p *= factor;
  return out;
}

ModuleMap ModuleMap::after(const ModuleMap& first) const {
  if (first.cols() != rows()) throw InputError("maps cannot be composed");
  ModuleMap out(first.source_, target_);
  for (std::size_t i = 0; i < first.rows(); ++i) {
    for (std::size_t k = 0; k < first.cols(); ++k) {
      const Poly& f = first.at(i, k);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!at(k, j).is_zero()) out.at(i, j) += f * at(k, j);
      }
    }
  }
  return out;
}

ModuleMap ModuleMap::substitute(const std::map<VarId, Poly>& bindings) const {
  ModuleMap out = *this;
  for (auto& p : out.entries_) p = p.substitute(bindings);
  return out;
}

bool ModuleMap::operator==(const ModuleMap& other) const {
  return rows() == other.rows() && cols() == other.cols() && entries_ == other.entries_;
}

namespace {

Poly det_rec(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * det_rec(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<std::vector<Poly>> rows_of(const ModuleMap& t) {
  std::vector<std::vector<Poly>> m(t.rows(), std::vector<Poly>(t.cols()));
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) m[i][j] = t.at(i, j);
  }
  return m;
}

}  // namespace

Poly ModuleMap::determinant() const {
  if (!is_square()) throw InputError("determinant of a non-square map");
  if (rows() == 0) return Poly(1L);
  return det_rec(rows_of(*this));
}

Invertibility classify_unit(const Poly& det) {
  if (det.is_zero()) return Invertibility::singular;
  if (det.is_constant()) return Invertibility::invertible;
  if (det.terms().size() == 1 && !det.uses_role(VarRole::derivation) &&
      !det.uses_role(VarRole::lambda)) {
    return Invertibility::generic;
  }
  return Invertibility::singular;
}

ModuleMap ModuleMap::inverse(std::string* genericity) const {
  const Poly det = determinant();
  const Invertibility kind = classify_unit(det);
  if (kind == Invertibility::singular) {
    throw InputError("map is not invertible: determinant " + det.to_string() + " is not a unit");
  }
  if (kind == Invertibility::generic && genericity) {
    *genericity = "invertible for generic parameters: " + det.to_string() + " != 0";
  }
  // 1/det as a Laurent monomial.
  const Term& t = det.terms().front();
  Monomial inv_mono;
  for (VarId id = 0; id < t.mono.width(); ++id) {
    if (t.mono.exponent(id) != 0) inv_mono = inv_mono * Monomial::var(id, -t.mono.exponent(id));
  }
  const Poly inv_det = Poly::term(1 / t.coeff, inv_mono, det.registry_or_global());

  const std::size_t n = rows();
  ModuleMap out(target_, source_);
  if (n == 1) {
    out.at(0, 0) = inv_det;
    return out;
  }
  const auto m = rows_of(*this);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Cofactor of (j, i) gives the (i, j) entry of the adjugate.
      std::vector<std::vector<Poly>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Poly> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Poly cof = det_rec(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      out.at(i, j) = cof * inv_det;
    }
  }
  return out;
}

std::string ModuleMap::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    os << source_.basis[i] << " -> " << image(i).to_string(target_) << '\n';
  }
  return os.str();
}

}  // namespace confalg
