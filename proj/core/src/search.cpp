#include "confalg/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "confalg/error.hpp"

namespace confalg {

SearchKind parse_search_kind(std::string_view name) {
  if (name == "rb" || name == "rota-baxter") return SearchKind::rota_baxter;
  if (name == "nijenhuis") return SearchKind::nijenhuis;
  if (name == "o" || name == "o-operator") return SearchKind::o_operator;
  throw InputError("unknown operator test '" + std::string(name) + "'");
}

std::string_view to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::rota_baxter:
      return "rb";
    case SearchKind::nijenhuis:
      return "nijenhuis";
    case SearchKind::o_operator:
      return "o";
  }
  return "?";
}

SearchTarget SearchTarget::rota_baxter(const Structure& s, const Poly& weight) {
  SearchTarget t;
  t.kind = SearchKind::rota_baxter;
  t.structure = s;
  t.weight = weight;
  return t;
}

SearchTarget SearchTarget::nijenhuis(const Structure& s) {
  SearchTarget t;
  t.kind = SearchKind::nijenhuis;
  t.structure = s;
  return t;
}

SearchTarget SearchTarget::o_operator(const Bimodule& m) {
  SearchTarget t;
  t.kind = SearchKind::o_operator;
  t.structure = m.base;
  t.bimodule = m;
  return t;
}

const FreeModule& SearchTarget::source() const {
  return kind == SearchKind::o_operator ? bimodule.space : structure.module;
}

const FreeModule& SearchTarget::target() const { return structure.module; }

Element SearchTarget::residual(const ModuleMap& t, std::size_t p, std::size_t q) const {
  switch (kind) {
    case SearchKind::rota_baxter:
      return rota_baxter_residual(t, structure, weight, p, q);
    case SearchKind::nijenhuis:
      return nijenhuis_residual(t, structure, p, q);
    case SearchKind::o_operator:
      return o_operator_residual(t, bimodule, p, q);
  }
  return {};
}

CheckReport SearchTarget::check(const ModuleMap& t, const CheckOptions& options) const {
  switch (kind) {
    case SearchKind::rota_baxter:
      return check_rota_baxter(t, structure, weight, options);
    case SearchKind::nijenhuis:
      return check_nijenhuis(t, structure, options);
    case SearchKind::o_operator:
      return check_o_operator(t, bimodule, options);
  }
  return {};
}

Ansatz Ansatz::make(const FreeModule& source, const FreeModule& target, int degree) {
  if (degree < 0) throw InputError("ansatz degree must be nonnegative");
  Ansatz a;
  a.source = source;
  a.target = target;
  a.degree = degree;
  a.map = ModuleMap(source, target);
  auto& reg = VarRegistry::global();
  const Poly d = Poly::var(var::d);
  for (std::size_t i = 0; i < source.rank(); ++i) {
    for (std::size_t j = 0; j < target.rank(); ++j) {
      for (int k = 0; k <= degree; ++k) {
        const std::string name = "c_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) +
                                 "_" + std::to_string(k);
        const VarId id = reg.parameter(name);
        a.unknowns.push_back(id);
        a.map.at(i, j) += Poly::var(id) * d.pow(static_cast<unsigned>(k));
      }
    }
  }
  return a;
}

ModuleMap Ansatz::instantiate(const std::vector<Rational>& values) const {
  if (values.size() != unknowns.size()) throw InputError("wrong number of ansatz values");
  std::map<VarId, Poly> bind;
  for (std::size_t n = 0; n < unknowns.size(); ++n) bind.emplace(unknowns[n], Poly(values[n]));
  return map.substitute(bind);
}

namespace {

/// Evaluates a polynomial in the unknowns given by position.
class PointEvaluator {
 public:
  explicit PointEvaluator(const std::vector<VarId>& unknowns) {
    for (std::size_t n = 0; n < unknowns.size(); ++n) position_.emplace(unknowns[n], n);
  }

  Rational operator()(const Poly& p, const std::vector<Rational>& values) const {
    Rational sum = 0;
    for (const auto& t : p.terms()) {
      Rational prod = t.coeff;
      const auto& exps = t.mono.exponents();
      for (VarId id = 0; id < exps.size() && prod != 0; ++id) {
        for (int e = 0; e < exps[id]; ++e) prod *= values[position_.at(id)];
      }
      sum += prod;
    }
    return sum;
  }

 private:
  std::unordered_map<VarId, std::size_t> position_;
};

Poly monic(const Poly& p) {
  const Rational lead = p.terms().front().coeff;
  return lead == 1 ? p : p.scaled(Rational(1) / lead);
}

}  // namespace

bool ConstraintSystem::vanishes_at(const std::vector<Rational>& values) const {
  if (values.size() != unknowns.size()) throw InputError("wrong number of values");
  const PointEvaluator eval(unknowns);
  return std::all_of(equations.begin(), equations.end(),
                     [&](const Poly& e) { return eval(e, values) == 0; });
}

ConstraintSystem generate_system(const SearchTarget& target, const Ansatz& ansatz) {
  if (ansatz.source.rank() != target.source().rank() ||
      ansatz.target.rank() != target.target().rank()) {
    throw InputError("ansatz shape does not match the operator test");
  }
  const std::set<VarId> unknown_set(ansatz.unknowns.begin(), ansatz.unknowns.end());
  ConstraintSystem sys;
  sys.unknowns = ansatz.unknowns;
  std::set<std::string> seen;
  const std::size_t n = target.source().rank();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Element res = target.residual(ansatz.map, p, q);
      for (const Poly& c : res.coeffs) {
        if (c.is_zero()) continue;
        std::vector<VarId> others;
        for (VarId v : c.variables()) {
          if (!unknown_set.count(v)) others.push_back(v);
        }
        for (const auto& [mono, eq] : c.coefficients_in(others)) {
          if (eq.is_zero()) continue;
          if (eq.is_constant()) {
            throw InputError("operator test has an inconsistent constraint " + eq.to_string());
          }
          Poly m = monic(eq);
          if (seen.insert(m.to_string()).second) sys.equations.push_back(std::move(m));
        }
      }
    }
  }
  return sys;
}

ConstraintSystem generate_system(const SearchTarget& target, int degree) {
  return generate_system(target, Ansatz::make(target.source(), target.target(), degree));
}

CheckReport verify_family(const SearchTarget& target, const ModuleMap& family,
                          const CheckOptions& options) {
  CheckReport r = target.check(family, options);
  r.subject = "family." + r.subject;
  return r;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t n = 0; n < exp; ++n) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

GridResult grid_enumerate(const SearchTarget& target, const Ansatz& ansatz,
                          const ConstraintSystem& system, const std::vector<Rational>& values,
                          const GridOptions& options) {
  if (values.empty()) throw InputError("grid needs at least one value");
  std::vector<Rational> grid = values;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::size_t nu = system.unknowns.size();
  std::unordered_map<VarId, std::size_t> position;
  for (std::size_t n = 0; n < nu; ++n) position.emplace(system.unknowns[n], n);

  UnionFind uf(nu);
  std::vector<bool> used(nu, false);
  for (const Poly& e : system.equations) {
    std::optional<std::size_t> first;
    for (VarId v : e.variables()) {
      auto it = position.find(v);
      if (it == position.end()) throw InputError("equation uses a variable outside the ansatz");
      used[it->second] = true;
      if (first) uf.unite(*first, it->second);
      first = it->second;
    }
  }

  GridResult result;
  result.unknowns = system.unknowns;
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t n = 0; n < nu; ++n) {
    if (!used[n]) result.free_unknowns.push_back(system.unknowns[n]);
    blocks[uf.find(n)].push_back(n);
  }
  std::map<std::size_t, std::vector<const Poly*>> block_equations;
  for (const Poly& e : system.equations) {
    block_equations[uf.find(position.at(e.variables().front()))].push_back(&e);
  }

  const PointEvaluator eval(system.unknowns);
  // Solutions of each block as value-index tuples.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>>> solved;
  std::size_t total = 1;
  for (const auto& [root, members] : blocks) {
    const std::size_t count = checked_power(grid.size(), members.size(), options.block_cap);
    if (count > options.block_cap) {
      throw InputError("grid too large: a block of " + std::to_string(members.size()) +
                       " unknowns exceeds the cap of " + std::to_string(options.block_cap) +
                       " points");
    }
    const auto& eqs = block_equations[root];
    std::vector<std::vector<std::size_t>> sols;
    std::vector<std::size_t> idx(members.size(), 0);
    std::vector<Rational> point(nu, Rational(0));
    for (std::size_t c = 0; c < count; ++c) {
      std::size_t rest = c;
      for (std::size_t m = members.size(); m-- > 0;) {
        idx[m] = rest % grid.size();
        rest /= grid.size();
        point[members[m]] = grid[idx[m]];
      }
      bool ok = true;
      for (const Poly* e : eqs) {
        if (eval(*e, point) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) sols.push_back(idx);
    }
    if (sols.empty()) return result;
    total *= sols.size();
    if (total > options.total_cap) {
      throw InputError("grid too large: more than " + std::to_string(options.total_cap) +
                       " solution points");
    }
    solved.emplace_back(members, std::move(sols));
  }

  std::vector<std::size_t> pick(solved.size(), 0);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t rest = c;
    std::vector<Rational> point(nu);
    for (std::size_t b = solved.size(); b-- > 0;) {
      const auto& [members, sols] = solved[b];
      const auto& chosen = sols[rest % sols.size()];
      rest /= sols.size();
      for (std::size_t m = 0; m < members.size(); ++m) point[members[m]] = grid[chosen[m]];
    }
    const CheckReport verdict = target.check(ansatz.instantiate(point));
    if (!verdict.verdict) {
      throw std::logic_error("grid point satisfies the equations but fails the direct check: " +
                             verdict.summary());
    }
    result.points.push_back(std::move(point));
  }
  std::sort(result.points.begin(), result.points.end());
  return result;
}

std::optional<std::string> classify_lw_operator(const ModuleMap& r) {
  if (r.rows() != 2 || r.cols() != 2) return std::nullopt;
  const Poly& ll = r.at(0, 0);
  const Poly& lw = r.at(0, 1);
  const Poly& wl = r.at(1, 0);
  const Poly& ww = r.at(1, 1);
  if (!wl.is_zero()) return std::nullopt;
  if (ll.is_zero() && lw.is_zero() && ww.is_zero()) return "zero";
  if (ll.is_zero() && ww.is_zero()) return "type1";
  if (!ww.is_constant() || ww.is_zero()) return std::nullopt;
  if (ll.is_zero()) return "type2";
  if (ll == ww.scaled(2)) return "type3";
  return std::nullopt;
}

ModuleMap lw_family(int type, int h_degree, const FreeModule& module, const std::string& prefix) {
  if (module.rank() != 2) throw InputError("the classification families live on rank 2");
  if (type < 1 || type > 3) throw InputError("family type must be 1, 2 or 3");
  if (h_degree < 0) throw InputError("degree of h must be nonnegative");
  Poly h;
  const Poly d = Poly::var(var::d);
  for (int k = 0; k <= h_degree; ++k) {
    const VarId hk = VarRegistry::global().parameter(prefix + "h" + std::to_string(k));
    h += Poly::var(hk) * d.pow(static_cast<unsigned>(k));
  }
  const Poly a = Poly::var(VarRegistry::global().parameter(prefix + "a"));
  ModuleMap out(module, module);
  out.at(0, 1) = h;
  if (type >= 2) out.at(1, 1) = a;
  if (type == 3) out.at(0, 0) = a.scaled(2);
  return out;
}

}  // namespace confalg
