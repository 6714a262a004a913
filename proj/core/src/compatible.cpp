#include "confalg/compatible.hpp"

#include "confalg/axioms.hpp"
#include "confalg/error.hpp"

namespace confalg {

namespace {

Poly lam() { return Poly::var(var::lm); }

Element reflected(const ProductTable& x, const Element& a, const Element& w) {
  return eval_product(x, a, w, Poly::var(var::th))
      .substitute_affine({{var::th, -Poly::var(var::d) - lam()}});
}

/// l(x)_lm v + r(y)_{-d-lm} u.
Element o_inner(const Bimodule& m, const Element& x, const Element& v, const Element& y,
                const Element& u) {
  return eval_product(m.l, x, v, lam()) + reflected(m.r, y, u);
}

void require_same(const ModuleMap& t1, const ModuleMap& t2) {
  if (t1.rows() != t2.rows() || t1.cols() != t2.cols()) {
    throw InputError("the two maps have different shapes");
  }
}

}  // namespace

Poly kappa1() { return Poly::var(VarRegistry::global().parameter("kappa_1")); }
Poly kappa2() { return Poly::var(VarRegistry::global().parameter("kappa_2")); }

CheckReport check_mixed_o_identity(const ModuleMap& t1, const ModuleMap& t2, const Bimodule& m,
                                   const CheckOptions& options) {
  require_same(t1, t2);
  const auto& circ = m.base.op("circ");
  const std::size_t nv = m.space.rank();
  return check_tuples(
      "mixed_o_identity", {&m.space, &m.space}, m.base.module,
      [&](const std::vector<std::size_t>& ix) -> std::optional<Violation> {
        const Element u = Element::basis(nv, ix[0]);
        const Element v = Element::basis(nv, ix[1]);
        const Element t1u = t1.image(ix[0]), t1v = t1.image(ix[1]);
        const Element t2u = t2.image(ix[0]), t2v = t2.image(ix[1]);
        Element res = eval_product(circ, t1u, t2v, lam()) + eval_product(circ, t2u, t1v, lam());
        res -= t1.apply(o_inner(m, t2u, v, t2v, u));
        res -= t2.apply(o_inner(m, t1u, v, t1v, u));
        if (res.is_zero()) return std::nullopt;
        return Violation{"mixed_o_identity", std::move(res)};
      },
      options);
}

CompatibilityReport check_compatible_o_operators(const ModuleMap& t1, const ModuleMap& t2,
                                                 const Bimodule& m, const CheckOptions& options) {
  require_same(t1, t2);
  CompatibilityReport out;
  out.mixed = first_failure("compatible_o_operators",
                            {check_o_operator(t1, m, options), check_o_operator(t2, m, options),
                             check_mixed_o_identity(t1, t2, m, options)});
  const ModuleMap combo = t1.scaled(kappa1()) + t2.scaled(kappa2());
  out.symbolic = check_o_operator(combo, m, options);
  out.symbolic.subject = "compatible_o_operators(symbolic)";
  return out;
}

CheckReport nt_check(const ModuleMap& n, const ModuleMap& t, const Bimodule& m,
                     const CheckOptions& options) {
  if (n.rows() != m.base.rank() || !n.is_square()) throw InputError("N must be a map on A");
  const ModuleMap nt = n.after(t);
  const auto& circ = m.base.op("circ");
  const std::size_t nv = m.space.rank();
  return check_tuples(
      "nt", {&m.space, &m.space}, m.base.module,
      [&](const std::vector<std::size_t>& ix) -> std::optional<Violation> {
        const Element u = Element::basis(nv, ix[0]);
        const Element v = Element::basis(nv, ix[1]);
        const Element tu = t.image(ix[0]), tv = t.image(ix[1]);
        const Element ntu = nt.image(ix[0]), ntv = nt.image(ix[1]);
        const Element lhs =
            n.apply(eval_product(circ, ntu, tv, lam()) + eval_product(circ, tu, ntv, lam()));
        const Element rhs =
            n.apply(t.apply(o_inner(m, ntu, v, ntv, u)) + nt.apply(o_inner(m, tu, v, tv, u)));
        Element res = lhs - rhs;
        if (res.is_zero()) return std::nullopt;
        return Violation{"nt_identity", std::move(res)};
      },
      options);
}

ModuleMap quotient_nijenhuis(const ModuleMap& t1, const ModuleMap& t2, std::string* genericity) {
  require_same(t1, t2);
  return t1.after(t2.inverse(genericity));
}

LdCompatibilityReport check_compatible_l_dendriform(const Structure& s1, const Structure& s2,
                                                    const CheckOptions& options) {
  if (s1.kind != Kind::l_dendriform || s2.kind != Kind::l_dendriform) {
    throw InputError("compatibility is defined for l-dendriform structures");
  }
  if (s1.module.rank() != s2.module.rank()) throw InputError("structures live on different modules");
  std::map<std::string, ProductTable> ops;
  for (const char* name : {"tri_r", "tri_l"}) {
    ops[std::string(name) + "#1"] = s1.op(name);
    ops[std::string(name) + "#2"] = s2.op(name);
  }
  LdCompatibilityReport out;
  out.mixed = first_failure(
      "compatible_l_dendriform",
      {check_axioms(s1, options), check_axioms(s2, options),
       check_laws("compatible_l_dendriform", s1.module, ops, polarize(laws_for(Kind::l_dendriform)),
                  options)});
  const Poly k1 = kappa1();
  const Poly k2 = kappa2();
  Structure combo(s1.module, Kind::l_dendriform,
                  {{"tri_r", s1.op("tri_r").scaled(k1) + s2.op("tri_r").scaled(k2)},
                   {"tri_l", s1.op("tri_l").scaled(k1) + s2.op("tri_l").scaled(k2)}});
  out.symbolic = check_axioms(combo, options);
  out.symbolic.subject = "compatible_l_dendriform(symbolic)";
  return out;
}

std::pair<Structure, Structure> compatible_pair_from_o_operators(const ModuleMap& t1,
                                                                 const ModuleMap& t2,
                                                                 const Bimodule& m) {
  return {induced_l_dendriform_tables(t1, m, LdFlavor::vertical),
          induced_l_dendriform_tables(t2, m, LdFlavor::vertical)};
}

std::pair<Structure, Structure> compatible_pair_on_base(const ModuleMap& t1, const ModuleMap& t2,
                                                        const Bimodule& m,
                                                        std::vector<std::string>* notes) {
  return {invertible_o_compatible_structure(t1, m, notes),
          invertible_o_compatible_structure(t2, m, notes)};
}

}  // namespace confalg
