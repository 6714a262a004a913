#include "confalg/lie_operators.hpp"

#include "confalg/error.hpp"

namespace confalg {

namespace {

Poly lam() { return Poly::var(var::lm); }

void require_lie(const Structure& g) {
  if (g.kind != Kind::lie) throw InputError("a Lie structure is required");
}

}  // namespace

ProductTable representation_rho(const Bimodule& m) { return m.l - m.r; }

CheckReport check_lie_o_operator(const ModuleMap& t, const Structure& g, const FreeModule& space,
                                 const ProductTable& rho, const CheckOptions& options) {
  require_lie(g);
  if (t.rows() != space.rank() || t.cols() != g.rank()) {
    throw InputError("map shape does not match the modules");
  }
  const auto& bracket = g.op("bracket");
  const std::size_t nv = space.rank();
  const Poly l = lam();
  const Poly th = Poly::var(var::th);
  const Poly reflected = -Poly::var(var::d) - l;
  return check_tuples(
      "lie_o_operator", {&space, &space}, g.module,
      [&](const std::vector<std::size_t>& ix) -> std::optional<Violation> {
        const Element u = Element::basis(nv, ix[0]);
        const Element v = Element::basis(nv, ix[1]);
        const Element tu = t.image(ix[0]);
        const Element tv = t.image(ix[1]);
        const Element inner =
            eval_product(rho, tu, v, l) -
            eval_product(rho, tv, u, th).substitute_affine({{var::th, reflected}});
        Element res = eval_product(bracket, tu, tv, l) - t.apply(inner);
        if (res.is_zero()) return std::nullopt;
        return Violation{"lie_o_operator", std::move(res)};
      },
      options);
}

CheckReport check_lie_rota_baxter(const ModuleMap& r, const Structure& g,
                                  const CheckOptions& options) {
  require_lie(g);
  CheckReport rep = check_lie_o_operator(r, g, g.module, g.op("bracket"), options);
  rep.subject = "lie_rota_baxter";
  if (!rep.verdict) rep.axiom_id = "lie_rota_baxter";
  return rep;
}

Structure lie_rb_left_symmetric(const ModuleMap& r, const Structure& g) {
  require_lie(g);
  const std::size_t n = g.rank();
  const auto& bracket = g.op("bracket");
  ProductTable circ = ProductTable::square(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      circ.set(p, q, eval_product(bracket, r.image(p), Element::basis(n, q), lam()));
    }
  }
  return Structure(g.module, Kind::left_symmetric, {{"circ", circ}});
}

Structure commuting_pair_l_dendriform(const ModuleMap& r1, const ModuleMap& r2,
                                      const Structure& g) {
  require_lie(g);
  const ModuleMap r12 = r1.after(r2);
  if (!(r12 == r2.after(r1))) throw InputError("the operators do not commute");
  const std::size_t n = g.rank();
  const auto& bracket = g.op("bracket");
  ProductTable tri_r = ProductTable::square(n);
  ProductTable tri_l = ProductTable::square(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      tri_r.set(p, q, eval_product(bracket, r12.image(p), Element::basis(n, q), lam()));
      tri_l.set(p, q, eval_product(bracket, r2.image(p), r1.image(q), lam()));
    }
  }
  return Structure(g.module, Kind::l_dendriform, {{"tri_r", tri_r}, {"tri_l", tri_l}});
}

}  // namespace confalg
