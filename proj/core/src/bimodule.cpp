#include "confalg/bimodule.hpp"

#include "confalg/derive.hpp"
#include "confalg/error.hpp"

namespace confalg {

Bimodule::Bimodule(Structure a, FreeModule v, ProductTable left, ProductTable right)
    : base(std::move(a)), space(std::move(v)), l(std::move(left)), r(std::move(right)) {
  validate();
}

void Bimodule::validate() const {
  if (base.kind != Kind::left_symmetric) {
    throw InputError("bimodules are defined over left-symmetric structures");
  }
  base.validate();
  const std::size_t na = base.rank();
  const std::size_t nv = space.rank();
  for (const auto* t : {&l, &r}) {
    if (t->left() != na || t->right() != nv || t->out() != nv) {
      throw InputError("bimodule action tables do not match the module ranks");
    }
  }
}

namespace {

Poly lam_var() { return Poly::var(var::lm); }
Poly mu_var() { return Poly::var(var::mu); }
Poly th_var() { return Poly::var(var::th); }
Poly d_var() { return Poly::var(var::d); }

/// x(a)_{shift} w where shift involves d: evaluated at th, then th -> shift.
Element act_shifted(const ProductTable& x, const Element& a, const Element& w, const Poly& shift) {
  return eval_product(x, a, w, th_var()).substitute_affine({{var::th, shift}});
}

}  // namespace

CheckReport check_bimodule(const Bimodule& m, const CheckOptions& options) {
  m.validate();
  const std::size_t na = m.base.rank();
  const std::size_t nv = m.space.rank();
  const ProductTable& circ = m.base.op("circ");
  const Poly lam = lam_var();
  const Poly mu = mu_var();
  const Poly sum = lam + mu;
  const Poly d = d_var();

  return check_tuples(
      "bimodule", {&m.base.module, &m.base.module, &m.space}, m.space,
      [&](const std::vector<std::size_t>& t) -> std::optional<Violation> {
        const Element a = Element::basis(na, t[0]);
        const Element b = Element::basis(na, t[1]);
        const Element v = Element::basis(nv, t[2]);

        const Element ab = eval_product(circ, a, b, lam);
        const Element ba = eval_product(circ, b, a, mu);
        Element left = eval_product(m.l, ab, v, sum);
        left -= eval_product(m.l, a, eval_product(m.l, b, v, mu), lam);
        left -= eval_product(m.l, ba, v, sum);
        left += eval_product(m.l, b, eval_product(m.l, a, v, lam), mu);
        if (!left.is_zero()) return Violation{"bimodule.left", std::move(left)};

        const Poly s1 = -d - lam - mu;
        const Poly s2 = -d - mu;
        Element right = act_shifted(m.r, b, eval_product(m.l, a, v, lam), s1);
        right -= eval_product(m.l, a, act_shifted(m.r, b, v, s2), lam);
        right -= act_shifted(m.r, b, eval_product(m.r, a, v, lam), s1);
        right += act_shifted(m.r, ab, v, s2);
        if (!right.is_zero()) return Violation{"bimodule.right", std::move(right)};
        return std::nullopt;
      },
      options);
}

Bimodule adjoint_bimodule(const Structure& s) {
  if (s.kind != Kind::left_symmetric) {
    throw InputError("the adjoint bimodule needs a left-symmetric structure");
  }
  const auto& circ = s.op("circ");
  return Bimodule(s, s.module, circ, opposite(circ));
}

Structure semidirect_table(const Bimodule& m) {
  const std::size_t na = m.base.rank();
  const std::size_t nv = m.space.rank();
  const std::size_t n = na + nv;
  ProductTable t = ProductTable::square(n);
  const auto& circ = m.base.op("circ");
  const ProductTable r_opp = opposite(m.r);  // (V, A, V): v_i o e_j = r(e_j)_{-d-lm} v_i
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < na; ++k) t.at(i, j, k) = circ.at(i, j, k);
    }
    for (std::size_t j = 0; j < nv; ++j) {
      for (std::size_t k = 0; k < nv; ++k) t.at(i, na + j, na + k) = m.l.at(i, j, k);
    }
  }
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < nv; ++k) t.at(na + i, j, na + k) = r_opp.at(i, j, k);
    }
  }
  return Structure(m.base.module.direct_sum(m.space), Kind::left_symmetric, {{"circ", t}});
}

Structure semidirect_product(const Bimodule& m, const CheckOptions& options) {
  const CheckReport report = check_bimodule(m, options);
  if (!report.verdict) throw InputError("not a bimodule: " + report.summary());
  return semidirect_table(m);
}

ProductTable star_action(const ProductTable& action) {
  ProductTable out(action.left(), action.right(), action.out());
  if (action.right() != action.out()) throw InputError("action table is not square in V");
  const std::map<VarId, Poly> bind{{var::d, -lam_var() - d_var()}};
  for (std::size_t i = 0; i < action.left(); ++i) {
    for (std::size_t j = 0; j < action.right(); ++j) {
      for (std::size_t k = 0; k < action.out(); ++k) {
        const Poly& p = action.at(i, k, j);
        if (!p.is_zero()) out.at(i, j, k) = -p.substitute_affine(bind);
      }
    }
  }
  return out;
}

DualFlavor parse_dual_flavor(std::string_view name) {
  if (name == "ls-dual" || name == "ls_dual") return DualFlavor::ls_dual;
  if (name == "horizontal" || name == "ld-horizontal" || name == "ld_horizontal")
    return DualFlavor::ld_horizontal;
  if (name == "vertical" || name == "ld-vertical" || name == "ld_vertical")
    return DualFlavor::ld_vertical;
  throw InputError("unknown dual flavor '" + std::string(name) + "'");
}

Bimodule dual_bimodule(const Bimodule& m) {
  const ProductTable ls = star_action(m.l);
  const ProductTable rs = star_action(m.r);
  return Bimodule(m.base, m.space.dual(), ls - rs, -rs);
}

Bimodule ld_horizontal_bimodule(const Structure& ld) {
  const Structure h = horizontal(ld);
  return Bimodule(h, ld.module, ld.op("tri_r"), opposite(ld.op("tri_l")));
}

Bimodule ld_vertical_bimodule(const Structure& ld) {
  const Structure v = vertical(ld);
  return Bimodule(v, ld.module, ld.op("tri_r"), -ld.op("tri_l"));
}

Bimodule dual_bimodule(const Structure& s, DualFlavor flavor) {
  switch (flavor) {
    case DualFlavor::ls_dual:
      return dual_bimodule(adjoint_bimodule(s));
    case DualFlavor::ld_horizontal:
      return dual_bimodule(ld_horizontal_bimodule(s));
    case DualFlavor::ld_vertical:
      return dual_bimodule(ld_vertical_bimodule(s));
  }
  throw InputError("unknown dual flavor");
}

}  // namespace confalg
