#include "confalg/tensor.hpp"

#include <sstream>

#include "confalg/error.hpp"

namespace confalg {

namespace {

std::string term_string(const Poly& c, const std::string& factors) {
  if (c == Poly(1L)) return factors;
  return "(" + c.to_string() + ")*" + factors;
}

void check_slots(const Poly& c, std::initializer_list<VarId> allowed) {
  for (VarId v : c.variables()) {
    if (c.registry_or_global().role(v) == VarRole::parameter) continue;
    bool ok = false;
    for (VarId a : allowed) ok = ok || a == v;
    if (!ok) {
      throw InputError("tensor coefficient " + c.to_string() +
                       " uses a variable other than the slot derivations");
    }
  }
}

}  // namespace

Poly TensorElement2::coeff(std::size_t p, std::size_t q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Poly() : it->second;
}

void TensorElement2::add(std::size_t p, std::size_t q, const Poly& c) {
  if (p >= base_.rank() || q >= base_.rank()) throw InputError("tensor index out of range");
  if (c.is_zero()) return;
  check_slots(c, {var::d1, var::d2});
  Poly& slot = terms_[{p, q}];
  slot += c;
  if (slot.is_zero()) terms_.erase({p, q});
}

TensorElement2 TensorElement2::operator+(const TensorElement2& other) const {
  if (!(base_ == other.base_)) throw InputError("tensors live over different modules");
  TensorElement2 out = *this;
  for (const auto& [key, c] : other.terms_) out.add(key[0], key[1], c);
  return out;
}

std::string TensorElement2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += term_string(c, base_.basis[key[0]] + " (x) " + base_.basis[key[1]]);
  }
  return out;
}

Poly TensorElement3::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = terms_.find({i, j, k});
  return it == terms_.end() ? Poly() : it->second;
}

void TensorElement3::add(std::size_t i, std::size_t j, std::size_t k, const Poly& c) {
  if (i >= base_.rank() || j >= base_.rank() || k >= base_.rank()) {
    throw InputError("tensor index out of range");
  }
  if (c.is_zero()) return;
  check_slots(c, {var::d1, var::d2, var::d3});
  Poly& slot = terms_[{i, j, k}];
  slot += c.reduce_mod_diagonal();
  if (slot.is_zero()) terms_.erase({i, j, k});
}

TensorElement3 TensorElement3::reduced() const {
  TensorElement3 out(base_);
  for (const auto& [key, c] : terms_) out.add(key[0], key[1], key[2], c);
  return out;
}

std::string TensorElement3::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += term_string(c, base_.basis[key[0]] + " (x) " + base_.basis[key[1]] + " (x) " +
                              base_.basis[key[2]]);
  }
  return out;
}

TensorElement2 flip(const TensorElement2& r) {
  TensorElement2 out(r.base());
  const std::map<VarId, Poly> swap{{var::d1, Poly::var(var::d2)}, {var::d2, Poly::var(var::d1)}};
  for (const auto& [key, c] : r.terms()) out.add(key[1], key[0], c.substitute_affine(swap));
  return out;
}

bool is_symmetric(const TensorElement2& r) { return r == flip(r); }

ConformalMap::ConformalMap(FreeModule source, FreeModule target)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(source_.rank() * target_.rank()) {}

ConformalMap ConformalMap::from_module_map(const ModuleMap& t) {
  ConformalMap out(t.source(), t.target());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) out.at(i, j) = t.at(i, j);
  }
  return out;
}

bool ConformalMap::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

int ConformalMap::lambda_degree() const {
  int deg = 0;
  for (const auto& p : entries_) deg = std::max(deg, p.degree_in(var::lm));
  return deg;
}

ModuleMap ConformalMap::at_zero() const {
  ModuleMap out(source_, target_);
  const std::map<VarId, Poly> zero{{var::lm, Poly()}};
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const Poly& p = at(i, j);
      out.at(i, j) = p.uses(var::lm) ? p.substitute(zero) : p;
    }
  }
  return out;
}

std::string ConformalMap::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    Element img(cols());
    for (std::size_t j = 0; j < cols(); ++j) img[j] = at(i, j);
    os << source_.basis[i] << " -> " << img.to_string(target_) << '\n';
  }
  return os.str();
}

}  // namespace confalg
