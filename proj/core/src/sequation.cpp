#include "confalg/sequation.hpp"

#include "confalg/derive.hpp"
#include "confalg/error.hpp"

namespace confalg {

namespace {

Poly d1() { return Poly::var(var::d1); }
Poly d2() { return Poly::var(var::d2); }

/// Replaces the two slot derivations of a tensor coefficient.
Poly slots(const Poly& c, const Poly& first, const Poly& second) {
  if (c.is_constant()) return c;
  return c.substitute_affine({{var::d1, first}, {var::d2, second}});
}

/// A product-table entry with lm and d renamed.
Poly rename(const Poly& p, const Poly& lam, const Poly& d) {
  if (p.is_constant()) return p;
  return p.substitute_affine({{var::lm, lam}, {var::d, d}});
}

struct Entry {
  std::size_t p;
  std::size_t q;
  Poly c;
};

}  // namespace

TensorElement3 double_bracket(const Structure& s, const TensorElement2& r) {
  if (s.kind != Kind::left_symmetric) {
    throw InputError("the S-equation is defined over left-symmetric structures");
  }
  s.validate();
  if (r.base().rank() != s.rank()) throw InputError("tensor and structure ranks differ");
  const ProductTable& circ = s.op("circ");
  const ProductTable bracket = commutator_lie(s).op("bracket");
  const std::size_t n = s.rank();

  std::vector<Entry> entries;
  for (const auto& [key, c] : r.terms()) entries.push_back({key[0], key[1], c});

  const Poly x1 = d1();
  const Poly x2 = d2();
  const Poly x3 = -x1 - x2;
  TensorElement3 out(r.base());
  for (const Entry& ei : entries) {
    // x_i sits in slot 1 or 2 with d of its own slot; y_i always ends in slot 3.
    const Poly ci_spread = slots(ei.c, x1 + x2, x3);
    const Poly ci_first = slots(ei.c, x1, -x1);
    for (const Entry& ej : entries) {
      const Poly cj_second = slots(ej.c, x2, -x2);
      const Poly cj_first = slots(ej.c, x1, -x1);
      for (std::size_t k = 0; k < n; ++k) {
        const Poly& prod = circ.at(ej.q, ei.p, k);
        if (!prod.is_zero()) {
          out.add(k, ej.p, ei.q, ci_spread * cj_second * rename(prod, x2, x1));
          out.add(ej.p, k, ei.q, -(cj_first * ci_spread * rename(prod, x1, x2)));
        }
        const Poly& br = bracket.at(ei.q, ej.q, k);
        if (!br.is_zero()) {
          out.add(ei.p, ej.p, k, -(ci_first * cj_second * rename(br, x1, x3)));
        }
      }
    }
  }
  return out;
}

CheckReport check_s_equation(const Structure& s, const TensorElement2& r) {
  const TensorElement3 value = double_bracket(s, r);
  CheckReport report;
  report.subject = "s_equation";
  report.residual_module = FreeModule::scalar();
  if (value.is_zero()) return report;
  const auto& [key, c] = *value.terms().begin();
  report.verdict = false;
  report.axiom_id = "s_equation";
  report.witness_index = {key[0], key[1], key[2]};
  for (std::size_t i : key) report.witness.push_back(value.base().basis[i]);
  report.residual = Element(std::vector<Poly>{c});
  return report;
}

ConformalMap t_from_r(const TensorElement2& r) {
  const FreeModule& a = r.base();
  ConformalMap out(a.dual(), a);
  const Poly lam = Poly::var(var::lm);
  const Poly d = Poly::var(var::d);
  for (const auto& [key, c] : r.terms()) out.at(key[0], key[1]) += slots(c, -lam - d, d);
  return out;
}

Structure s_equation_ambient(const Bimodule& m) { return semidirect_table(dual_bimodule(m)); }

TensorElement2 r_from_t(const ConformalMap& t, const Bimodule& m) {
  const std::size_t na = m.base.rank();
  if (t.rows() != m.space.rank() || t.cols() != na) {
    throw InputError("map shape does not match the bimodule");
  }
  TensorElement2 rt(m.base.module.direct_sum(m.space.dual()));
  const Poly x1 = d1();
  const Poly x2 = d2();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Poly& a = t.at(i, j);
      if (a.is_zero()) continue;
      rt.add(j, na + i, rename(a, -x1 - x2, x1));
    }
  }
  return rt + flip(rt);
}

TensorElement2 r_from_t(const ModuleMap& t, const Bimodule& m) {
  return r_from_t(ConformalMap::from_module_map(t), m);
}

std::pair<TensorElement2, Structure> canonical_r(const Structure& ld, LdFlavor flavor) {
  if (ld.kind != Kind::l_dendriform) {
    throw InputError("the canonical solution needs an l-dendriform structure");
  }
  const Bimodule m =
      flavor == LdFlavor::vertical ? ld_vertical_bimodule(ld) : ld_horizontal_bimodule(ld);
  ModuleMap id(m.space, m.base.module);
  for (std::size_t i = 0; i < m.space.rank(); ++i) id.at(i, i) = Poly(1L);
  return {r_from_t(id, m), s_equation_ambient(m)};
}

}  // namespace confalg
