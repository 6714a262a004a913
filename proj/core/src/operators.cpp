#include "confalg/operators.hpp"

#include "confalg/derive.hpp"
#include "confalg/error.hpp"

namespace confalg {

namespace {

Poly lam() { return Poly::var(var::lm); }
Poly th() { return Poly::var(var::th); }
Poly dd() { return Poly::var(var::d); }

void require_shape(const ModuleMap& t, const FreeModule& source, const FreeModule& target) {
  if (t.rows() != source.rank() || t.cols() != target.rank()) {
    throw InputError("map shape does not match the modules");
  }
}

/// x(a)_{-d-lm} w.
Element act_reflected(const ProductTable& x, const Element& a, const Element& w) {
  return eval_product(x, a, w, th()).substitute_affine({{var::th, -dd() - lam()}});
}

Element rb_residual(const ModuleMap& r, const ProductTable& circ, const Poly& weight,
                    std::size_t p, std::size_t q, bool nijenhuis) {
  const std::size_t n = circ.left();
  const Element a = Element::basis(n, p);
  const Element b = Element::basis(n, q);
  const Element ra = r.image(p);
  const Element rb = r.image(q);
  const Poly l = lam();
  Element inner = eval_product(circ, ra, b, l) + eval_product(circ, a, rb, l);
  const Element ab = eval_product(circ, a, b, l);
  if (nijenhuis) {
    inner -= r.apply(ab);
  } else if (!weight.is_zero()) {
    inner += ab.scaled(weight);
  }
  return eval_product(circ, ra, rb, l) - r.apply(inner);
}

CheckReport pair_check(const std::string& subject, const FreeModule& module,
                       const FreeModule& out, const CheckOptions& options,
                       const std::string& axiom,
                       const std::function<Element(std::size_t, std::size_t)>& residual) {
  return check_tuples(
      subject, {&module, &module}, out,
      [&](const std::vector<std::size_t>& t) -> std::optional<Violation> {
        Element res = residual(t[0], t[1]);
        if (res.is_zero()) return std::nullopt;
        return Violation{axiom, std::move(res)};
      },
      options);
}

}  // namespace

Element rota_baxter_residual(const ModuleMap& r, const Structure& s, const Poly& weight,
                             std::size_t p, std::size_t q) {
  require_shape(r, s.module, s.module);
  return rb_residual(r, s.op("circ"), weight, p, q, false);
}

Element nijenhuis_residual(const ModuleMap& n, const Structure& s, std::size_t p, std::size_t q) {
  require_shape(n, s.module, s.module);
  return rb_residual(n, s.op("circ"), Poly(), p, q, true);
}

Element o_operator_residual(const ModuleMap& t, const Bimodule& m, std::size_t p, std::size_t q) {
  const std::size_t nv = m.space.rank();
  const Element u = Element::basis(nv, p);
  const Element v = Element::basis(nv, q);
  const Element tu = t.image(p);
  const Element tv = t.image(q);
  const Poly l = lam();
  const Element lhs = eval_product(m.base.op("circ"), tu, tv, l);
  const Element inner = eval_product(m.l, tu, v, l) + act_reflected(m.r, tv, u);
  return lhs - t.apply(inner);
}

CheckReport check_o_operator(const ModuleMap& t, const Bimodule& m, const CheckOptions& options) {
  require_shape(t, m.space, m.base.module);
  return pair_check("o_operator", m.space, m.base.module, options, "o_operator",
                    [&](std::size_t p, std::size_t q) { return o_operator_residual(t, m, p, q); });
}

CheckReport check_rota_baxter(const ModuleMap& r, const Structure& s, const Poly& weight,
                              const CheckOptions& options) {
  require_shape(r, s.module, s.module);
  const auto& circ = s.op("circ");
  return pair_check("rota_baxter", s.module, s.module, options, "rota_baxter",
                    [&](std::size_t p, std::size_t q) {
                      return rb_residual(r, circ, weight, p, q, false);
                    });
}

CheckReport check_nijenhuis(const ModuleMap& n, const Structure& s, const CheckOptions& options) {
  require_shape(n, s.module, s.module);
  const auto& circ = s.op("circ");
  return pair_check("nijenhuis", s.module, s.module, options, "nijenhuis",
                    [&](std::size_t p, std::size_t q) {
                      return rb_residual(n, circ, Poly(), p, q, true);
                    });
}

Structure deformed_product(const Structure& s, const ModuleMap& n) {
  require_shape(n, s.module, s.module);
  const auto& circ = s.op("circ");
  const std::size_t rank = s.rank();
  const Poly l = lam();
  ProductTable out = ProductTable::square(rank);
  for (std::size_t p = 0; p < rank; ++p) {
    for (std::size_t q = 0; q < rank; ++q) {
      const Element a = Element::basis(rank, p);
      const Element b = Element::basis(rank, q);
      Element value = eval_product(circ, n.image(p), b, l) + eval_product(circ, a, n.image(q), l) -
                      n.apply(eval_product(circ, a, b, l));
      out.set(p, q, value);
    }
  }
  return Structure(s.module, Kind::left_symmetric, {{"circ", out}});
}

std::vector<RelationClause> nijenhuis_rb_relations(const ModuleMap& n, const Structure& s) {
  const ModuleMap n2 = n.after(n);
  const ModuleMap id = ModuleMap::identity(s.module);
  const bool nij = check_nijenhuis(n, s).verdict;
  std::vector<RelationClause> out;

  RelationClause zero{"N^2 = 0", n2.is_zero(), nij, {}, true};
  if (zero.applies) {
    zero.rota_baxter.emplace_back("N weight 0", check_rota_baxter(n, s, Poly()).verdict);
  }
  out.push_back(zero);

  RelationClause idem{"N^2 = N", n2 == n, nij, {}, true};
  if (idem.applies) {
    idem.rota_baxter.emplace_back("N weight -1", check_rota_baxter(n, s, Poly(-1L)).verdict);
  }
  out.push_back(idem);

  RelationClause invol{"N^2 = id", n2 == id, nij, {}, true};
  if (invol.applies) {
    invol.rota_baxter.emplace_back("N + id weight -2",
                                   check_rota_baxter(n + id, s, Poly(-2L)).verdict);
    invol.rota_baxter.emplace_back("N - id weight 2",
                                   check_rota_baxter(n - id, s, Poly(2L)).verdict);
  }
  out.push_back(invol);

  for (auto& c : out) {
    for (const auto& [name, rb] : c.rota_baxter) c.consistent = c.consistent && (rb == c.nijenhuis);
  }
  return out;
}

CheckReport graph_check(const ModuleMap& t, const Bimodule& m, const CheckOptions& options) {
  require_shape(t, m.space, m.base.module);
  const Structure sd = semidirect_table(m);
  const std::size_t na = m.base.rank();
  const std::size_t nv = m.space.rank();
  std::vector<Element> gens;
  for (std::size_t i = 0; i < nv; ++i) {
    Element g(na + nv);
    const Element ti = t.image(i);
    for (std::size_t k = 0; k < na; ++k) g[k] = ti[k];
    g[na + i] = Poly(1L);
    gens.push_back(std::move(g));
  }
  const auto& circ = sd.op("circ");
  return pair_check("graph", m.space, m.base.module, options, "graph_closure",
                    [&](std::size_t p, std::size_t q) {
                      const Element prod = eval_product(circ, gens[p], gens[q], lam());
                      Element xa(na), xv(nv);
                      for (std::size_t k = 0; k < na; ++k) xa[k] = prod[k];
                      for (std::size_t k = 0; k < nv; ++k) xv[k] = prod[na + k];
                      return xa - t.apply(xv);
                    });
}

ModuleMap lift(const ModuleMap& t, const Bimodule& m) {
  require_shape(t, m.space, m.base.module);
  const FreeModule sum = m.base.module.direct_sum(m.space);
  const std::size_t na = m.base.rank();
  ModuleMap out(sum, sum);
  for (std::size_t i = 0; i < m.space.rank(); ++i) {
    for (std::size_t j = 0; j < na; ++j) out.at(na + i, j) = t.at(i, j);
  }
  return out;
}

CheckReport lift_check(const ModuleMap& t, const Bimodule& m, const CheckOptions& options) {
  CheckReport r = check_rota_baxter(lift(t, m), semidirect_table(m), Poly(), options);
  r.subject = "lift";
  return r;
}

LdFlavor parse_ld_flavor(std::string_view name) {
  if (name == "vertical") return LdFlavor::vertical;
  if (name == "horizontal") return LdFlavor::horizontal;
  throw InputError("unknown flavor '" + std::string(name) + "' (expected vertical or horizontal)");
}

std::string_view to_string(LdFlavor f) {
  return f == LdFlavor::vertical ? "vertical" : "horizontal";
}

Structure induced_l_dendriform_tables(const ModuleMap& t, const Bimodule& m, LdFlavor flavor) {
  require_shape(t, m.space, m.base.module);
  const std::size_t nv = m.space.rank();
  ProductTable tri_r = ProductTable::square(nv);
  ProductTable tri_l = ProductTable::square(nv);
  const Poly l = lam();
  for (std::size_t p = 0; p < nv; ++p) {
    for (std::size_t q = 0; q < nv; ++q) {
      const Element u = Element::basis(nv, p);
      const Element v = Element::basis(nv, q);
      tri_r.set(p, q, eval_product(m.l, t.image(p), v, l));
      if (flavor == LdFlavor::vertical) {
        tri_l.set(p, q, -eval_product(m.r, t.image(p), v, l));
      } else {
        tri_l.set(p, q, act_reflected(m.r, t.image(q), u));
      }
    }
  }
  return Structure(m.space, Kind::l_dendriform, {{"tri_r", tri_r}, {"tri_l", tri_l}});
}

Structure induced_l_dendriform(const ModuleMap& t, const Bimodule& m, LdFlavor flavor,
                               const CheckOptions& options) {
  const CheckReport r = check_o_operator(t, m, options);
  if (!r.verdict) throw InputError("not an O-operator: " + r.summary());
  return induced_l_dendriform_tables(t, m, flavor);
}

CheckReport check_homomorphism(const ModuleMap& f, const FreeModule& source,
                               const ProductTable& source_op, const FreeModule& target,
                               const ProductTable& target_op, const CheckOptions& options) {
  require_shape(f, source, target);
  const std::size_t n = source.rank();
  return pair_check("homomorphism", source, target, options, "homomorphism",
                    [&](std::size_t p, std::size_t q) {
                      const Element x = Element::basis(n, p);
                      const Element y = Element::basis(n, q);
                      return f.apply(eval_product(source_op, x, y, lam())) -
                             eval_product(target_op, f.image(p), f.image(q), lam());
                    });
}

Structure invertible_o_compatible_structure(const ModuleMap& t, const Bimodule& m,
                                            std::vector<std::string>* notes) {
  require_shape(t, m.space, m.base.module);
  std::string genericity;
  const ModuleMap inv = t.inverse(&genericity);
  if (notes && !genericity.empty()) notes->push_back(genericity);
  const std::size_t na = m.base.rank();
  ProductTable tri_r = ProductTable::square(na);
  ProductTable tri_l = ProductTable::square(na);
  const Poly l = lam();
  for (std::size_t p = 0; p < na; ++p) {
    const Element a = Element::basis(na, p);
    for (std::size_t q = 0; q < na; ++q) {
      const Element w = inv.image(q);
      tri_r.set(p, q, t.apply(eval_product(m.l, a, w, l)));
      tri_l.set(p, q, -t.apply(eval_product(m.r, a, w, l)));
    }
  }
  return Structure(m.base.module, Kind::l_dendriform, {{"tri_r", tri_r}, {"tri_l", tri_l}});
}

}  // namespace confalg
