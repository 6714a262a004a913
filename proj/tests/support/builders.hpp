#pragma once

#include <map>
#include <string>
#include <vector>

#include "confalg/poly_parse.hpp"
#include "confalg/structure.hpp"

namespace confalg::testing {

struct TableEntry {
  std::string left;
  std::string right;
  std::string out;
  std::string coeff;
};

inline ProductTable make_table(const FreeModule& left, const FreeModule& right,
                               const FreeModule& out, const std::vector<TableEntry>& entries) {
  ProductTable t(left.rank(), right.rank(), out.rank());
  for (const auto& e : entries) {
    t.at(left.index_of(e.left), right.index_of(e.right), out.index_of(e.out)) +=
        parse_poly(e.coeff);
  }
  return t;
}

/// Structure from named table entries; ops not listed are zero.
inline Structure make_structure(const std::vector<std::string>& basis, Kind kind,
                                const std::map<std::string, std::vector<TableEntry>>& ops) {
  const FreeModule m(basis);
  std::map<std::string, ProductTable> tables;
  for (const auto& name : required_ops(kind)) tables.emplace(name, ProductTable::square(m.rank()));
  for (const auto& [name, entries] : ops) tables[name] = make_table(m, m, m, entries);
  return Structure(m, kind, std::move(tables));
}

inline Poly P(const std::string& text) { return parse_poly(text); }

/// Registers and returns a parameter.
inline Poly param(const std::string& name) {
  return Poly::var(VarRegistry::global().parameter(name));
}

/// Dendriform pair from the weight -1 projection onto e1 of C x C:
/// a succ b = R(a) b, a prec b = a R(b) - a b. Only e1 succ e1 = e1 and
/// e2 prec e2 = -e2 survive.
inline Structure projection_dendriform() {
  return make_structure({"e1", "e2"}, Kind::dendriform,
                        {{"succ", {{"e1", "e1", "e1", "1"}}}, {"prec", {{"e2", "e2", "e2", "-1"}}}});
}

/// Quadri structure on the tensor product of two dendriform current
/// structures: ne = succ x prec, se = succ x succ, sw = prec x succ,
/// nw = prec x prec. Basis element (i, j) sits at index i * rank(b) + j.
inline Structure tensor_quadri(const Structure& a, const Structure& b) {
  const std::size_t na = a.rank(), nb = b.rank(), n = na * nb;
  std::vector<std::string> names;
  for (const auto& x : a.module.basis) {
    for (const auto& y : b.module.basis) names.push_back(x + "_" + y);
  }
  const std::map<std::string, std::pair<std::string, std::string>> recipe{
      {"ne", {"succ", "prec"}}, {"se", {"succ", "succ"}}, {"sw", {"prec", "succ"}},
      {"nw", {"prec", "prec"}}};
  std::map<std::string, ProductTable> ops;
  for (const auto& [name, pair] : recipe) {
    const ProductTable& ta = a.op(pair.first);
    const ProductTable& tb = b.op(pair.second);
    ProductTable t = ProductTable::square(n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t k = 0; k < na; ++k)
          for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t j2 = 0; j2 < nb; ++j2)
              for (std::size_t l = 0; l < nb; ++l)
                t.at(i * nb + j, i2 * nb + j2, k * nb + l) += ta.at(i, i2, k) * tb.at(j, j2, l);
    ops[name] = std::move(t);
  }
  return Structure(FreeModule(names), Kind::quadri, std::move(ops));
}

}  // namespace confalg::testing
