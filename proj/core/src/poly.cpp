#include "confalg/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "confalg/error.hpp"

namespace confalg {

// ---- Monomial --------------------------------------------------------------

Monomial Monomial::var(VarId id, int exponent) {
  Monomial m;
  if (exponent != 0) {
    m.exps_.assign(id + 1, 0);
    m.exps_[id] = static_cast<std::int16_t>(exponent);
  }
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::total_degree() const {
  int total = 0;
  for (auto e : exps_) total += e;
  return total;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  const auto& a = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
  const auto& b = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
  out.exps_ = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int e = out.exps_[i] + b[i];
    if (e > std::numeric_limits<std::int16_t>::max() || e < std::numeric_limits<std::int16_t>::min()) {
      throw InputError("exponent overflow");
    }
    out.exps_[i] = static_cast<std::int16_t>(e);
  }
  out.trim();
  return out;
}

Monomial Monomial::without(VarId id) const {
  Monomial out = *this;
  if (id < out.exps_.size()) {
    out.exps_[id] = 0;
    out.trim();
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
  const std::size_t n = std::max(exps_.size(), other.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = exponent(static_cast<VarId>(i)) <=> other.exponent(static_cast<VarId>(i)); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

// ---- Poly ------------------------------------------------------------------

std::string to_string(const Rational& q) { return q.get_str(); }

Poly::Poly(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Rational(value)});
}

Poly::Poly(const Rational& value) {
  if (value != 0) {
    Rational c = value;
    c.canonicalize();
    terms_.push_back({Monomial{}, c});
  }
}

Poly Poly::var(VarId id, const VarRegistry& reg) {
  if (id >= reg.size()) throw InputError("unknown variable id " + std::to_string(id));
  Poly p;
  p.reg_ = &reg;
  p.terms_.push_back({Monomial::var(id), Rational(1)});
  return p;
}

Poly Poly::var(std::string_view name, const VarRegistry& reg) {
  auto id = reg.find(name);
  if (!id) throw InputError("unknown variable '" + std::string(name) + "'");
  return var(*id, reg);
}

Poly Poly::term(const Rational& coeff, Monomial mono, const VarRegistry& reg) {
  Poly p;
  p.reg_ = &reg;
  if (coeff != 0) p.terms_.push_back({std::move(mono), coeff});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms, const VarRegistry* reg) {
  Poly p;
  p.reg_ = reg;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Rational sum = terms_[i].coeff;
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) {
      sum += terms_[j].coeff;
      ++j;
    }
    if (sum != 0) {
      if (out != i) terms_[out].mono = std::move(terms_[i].mono);
      terms_[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

void Poly::adopt_registry(const Poly& other) {
  if (other.reg_ == nullptr) return;
  if (reg_ == nullptr) {
    reg_ = other.reg_;
  } else if (reg_ != other.reg_) {
    throw InputError("polynomials belong to different variable registries");
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

int Poly::degree_in(VarId id) const {
  int deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.mono.exponent(id));
  return deg;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.total_degree(); }

bool Poly::uses(VarId id) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [id](const Term& t) { return t.mono.exponent(id) != 0; });
}

std::vector<VarId> Poly::variables() const {
  std::size_t width = 0;
  for (const auto& t : terms_) width = std::max(width, t.mono.width());
  std::vector<VarId> out;
  for (VarId id = 0; id < width; ++id) {
    if (uses(id)) out.push_back(id);
  }
  return out;
}

bool Poly::uses_role(VarRole role) const {
  const auto& reg = registry_or_global();
  for (VarId id : variables()) {
    if (reg.role(id) == role) return true;
  }
  return false;
}

bool Poly::is_polynomial() const {
  for (const auto& t : terms_) {
    for (auto e : t.mono.exponents()) {
      if (e < 0) return false;
    }
  }
  return true;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  adopt_registry(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->coeff + b->coeff;
      if (sum != 0) merged.push_back({std::move(a->mono), std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  out.reg_ = a.reg_;
  out.adopt_registry(b);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  out.normalize();
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

bool Poly::operator==(const Poly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  if (reg_ && other.reg_ && reg_ != other.reg_ && !terms_.empty()) return false;
  return true;
}

Poly Poly::scaled(const Rational& factor) const {
  if (factor == 0) {
    Poly z;
    z.reg_ = reg_;
    return z;
  }
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1L);
  result.reg_ = reg_;
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(const std::map<VarId, Poly>& bindings) const {
  if (bindings.empty() || terms_.empty()) return *this;
  Poly out;
  out.reg_ = reg_;
  for (const auto& [id, image] : bindings) out.adopt_registry(image);

  // Powers of each image are cached; negative exponents need a constant image.
  std::map<std::pair<VarId, int>, Poly> powers;
  auto power_of = [&](VarId id, const Poly& image, int e) -> const Poly& {
    auto key = std::make_pair(id, e);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    Poly value;
    if (e >= 0) {
      value = image.pow(static_cast<unsigned>(e));
    } else {
      if (!image.is_constant() || image.is_zero()) {
        throw InputError("cannot substitute a non-constant value into a negative power of '" +
                         registry_or_global().name(id) + "'");
      }
      Rational inv = 1 / image.constant_term();
      Rational r = 1;
      for (int k = 0; k < -e; ++k) r *= inv;
      value = Poly(r);
    }
    return powers.emplace(key, std::move(value)).first->second;
  };

  std::vector<Term> pending;
  for (const auto& t : terms_) {
    Monomial rest;
    Poly factor(t.coeff);
    factor.reg_ = out.reg_;
    const auto& exps = t.mono.exponents();
    for (VarId id = 0; id < exps.size(); ++id) {
      const int e = exps[id];
      if (e == 0) continue;
      auto it = bindings.find(id);
      if (it == bindings.end()) {
        rest = rest * Monomial::var(id, e);
      } else {
        factor *= power_of(id, it->second, e);
      }
    }
    for (const auto& f : factor.terms_) pending.push_back({f.mono * rest, f.coeff});
  }
  out.terms_ = std::move(pending);
  out.normalize();
  return out;
}

Poly Poly::substitute_affine(const std::map<VarId, Poly>& bindings) const {
  const auto& reg = registry_or_global();
  for (const auto& [id, image] : bindings) {
    if (reg.role(id) == VarRole::parameter) {
      throw InputError("parameter '" + reg.name(id) + "' cannot be substituted");
    }
    for (const auto& t : image.terms()) {
      if (t.mono.total_degree() > 1 || !image.is_polynomial()) {
        throw InputError("image of '" + reg.name(id) + "' is not affine");
      }
    }
  }
  return substitute(bindings);
}

Poly Poly::reduce_mod_diagonal() const {
  if (!uses(var::d3)) return *this;
  const auto& reg = registry_or_global();
  return substitute({{var::d3, -Poly::var(var::d1, reg) - Poly::var(var::d2, reg)}});
}

std::map<Monomial, Poly> Poly::coefficients_in(const std::vector<VarId>& vars) const {
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Monomial key;
    Monomial rest = t.mono;
    for (VarId id : vars) {
      const int e = t.mono.exponent(id);
      if (e != 0) {
        key = key * Monomial::var(id, e);
        rest = rest.without(id);
      }
    }
    buckets[key].push_back({std::move(rest), t.coeff});
  }
  std::map<Monomial, Poly> out;
  for (auto& [key, terms] : buckets) out.emplace(key, from_terms(std::move(terms), reg_));
  return out;
}

Poly Poly::evaluate(const std::map<VarId, Rational>& values) const {
  std::map<VarId, Poly> bindings;
  for (const auto& [id, value] : values) bindings.emplace(id, Poly(value));
  return substitute(bindings);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& reg = registry_or_global();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    const auto& exps = t.mono.exponents();
    for (VarId id = 0; id < exps.size(); ++id) {
      if (exps[id] == 0) continue;
      if (wrote) os << '*';
      os << reg.name(id);
      if (exps[id] != 1) os << '^' << exps[id];
      wrote = true;
    }
  }
  return os.str();
}

std::size_t Poly::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (const auto& t : terms_) {
    for (auto e : t.mono.exponents()) mix(static_cast<std::size_t>(static_cast<std::uint16_t>(e)));
    mix(0xffff1);
    mix(std::hash<std::string>{}(t.coeff.get_str()));
  }
  return h;
}

}  // namespace confalg
