#include "confalg/element.hpp"

#include <set>

#include "confalg/error.hpp"

namespace confalg {

FreeModule::FreeModule(std::vector<std::string> names) : basis(std::move(names)) {
  if (basis.empty()) throw InputError("a free module needs at least one basis element");
  std::set<std::string> seen;
  for (const auto& n : basis) {
    if (!seen.insert(n).second) throw InputError("duplicate basis name '" + n + "'");
  }
}

FreeModule FreeModule::numbered(std::size_t rank, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back(prefix + std::to_string(i));
  return FreeModule(std::move(names));
}

std::size_t FreeModule::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == name) return i;
  }
  throw InputError("unknown basis element '" + name + "'");
}

FreeModule FreeModule::direct_sum(const FreeModule& other) const {
  std::vector<std::string> names = basis;
  std::set<std::string> taken(basis.begin(), basis.end());
  for (std::string name : other.basis) {
    while (taken.count(name) != 0) name += "'";
    taken.insert(name);
    names.push_back(std::move(name));
  }
  return FreeModule(std::move(names));
}

FreeModule FreeModule::dual() const {
  std::vector<std::string> names;
  for (const auto& n : basis) names.push_back(n + "*");
  return FreeModule(std::move(names));
}

Element Element::basis(std::size_t rank, std::size_t i) {
  Element e(rank);
  e.coeffs.at(i) = Poly(1L);
  return e;
}

bool Element::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Element& Element::operator+=(const Element& other) {
  if (other.size() != size()) throw InputError("element ranks differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] += other.coeffs[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (other.size() != size()) throw InputError("element ranks differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= other.coeffs[i];
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

Element Element::scaled(const Poly& factor) const {
  Element out = *this;
  for (auto& c : out.coeffs) c *= factor;
  return out;
}

Element Element::substitute(const std::map<VarId, Poly>& bindings) const {
  Element out = *this;
  for (auto& c : out.coeffs) c = c.substitute(bindings);
  return out;
}

Element Element::substitute_affine(const std::map<VarId, Poly>& bindings) const {
  Element out = *this;
  for (auto& c : out.coeffs) c = c.substitute_affine(bindings);
  return out;
}

std::string Element::to_string(const FreeModule& module) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string name = i < module.rank() ? module.basis[i] : "e" + std::to_string(i + 1);
    if (name.empty()) {
      out += coeffs[i].to_string();
    } else if (coeffs[i] == Poly(1L)) {
      out += name;
    } else {
      out += "(" + coeffs[i].to_string() + ")*" + name;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace confalg
