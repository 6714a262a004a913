#include "confalg/bilinear_form.hpp"

#include "confalg/bimodule.hpp"
#include "confalg/error.hpp"
#include "confalg/operators.hpp"

namespace confalg {

BilinearForm::BilinearForm(FreeModule m) : module(std::move(m)), entries(module.rank() * module.rank()) {}

void BilinearForm::validate() const {
  if (entries.size() != module.rank() * module.rank()) throw InputError("form has the wrong size");
  for (const auto& p : entries) {
    if (p.uses_role(VarRole::derivation)) throw InputError("form entries must not involve d");
    for (VarId id : p.variables()) {
      if (VarRegistry::global().role(id) == VarRole::lambda && id != var::lm) {
        throw InputError("form entries may only use lm and parameters");
      }
    }
  }
}

Poly evaluate_form(const BilinearForm& b, const Element& x, const Element& y, const Poly& lam) {
  const std::size_t n = b.module.rank();
  Poly total;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    const Poly f = x[i].substitute({{var::d, -lam}});
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || b.at(i, j).is_zero()) continue;
      total += f * y[j].substitute({{var::d, lam}}) * b.at(i, j).substitute({{var::lm, lam}});
    }
  }
  return total;
}

CheckReport check_cocycle(const BilinearForm& b, const Structure& s, const CheckOptions& options) {
  if (s.kind != Kind::left_symmetric) throw InputError("2-cocycles need a left-symmetric structure");
  b.validate();
  if (b.module.rank() != s.rank()) throw InputError("form and structure ranks differ");
  const auto& circ = s.op("circ");
  const std::size_t n = s.rank();
  const Poly lm = Poly::var(var::lm);
  const Poly mu = Poly::var(var::mu);
  auto sides = [&](std::size_t p, std::size_t q, std::size_t r) {
    const Element a = Element::basis(n, p), bb = Element::basis(n, q), c = Element::basis(n, r);
    const Poly lhs = evaluate_form(b, eval_product(circ, a, bb, lm), c, lm + mu) -
                     evaluate_form(b, a, eval_product(circ, bb, c, mu), lm);
    const Poly rhs = evaluate_form(b, eval_product(circ, bb, a, mu), c, lm + mu) -
                     evaluate_form(b, bb, eval_product(circ, a, c, lm), mu);
    return std::make_pair(lhs, rhs);
  };
  CheckReport rep = check_tuples(
      "cocycle", {&s.module, &s.module, &s.module}, FreeModule::scalar(),
      [&](const std::vector<std::size_t>& t) -> std::optional<Violation> {
        auto [lhs, rhs] = sides(t[0], t[1], t[2]);
        if (lhs == rhs) return std::nullopt;
        return Violation{"cocycle", Element(std::vector<Poly>{lhs - rhs})};
      },
      options);
  if (!rep.verdict) {
    auto [lhs, rhs] = sides(rep.witness_index[0], rep.witness_index[1], rep.witness_index[2]);
    rep.notes.push_back("lhs = " + lhs.to_string());
    rep.notes.push_back("rhs = " + rhs.to_string());
  }
  return rep;
}

CheckReport check_form_symmetric(const BilinearForm& b) {
  b.validate();
  const Poly neg = -Poly::var(var::lm);
  return check_tuples(
      "symmetric", {&b.module, &b.module}, FreeModule::scalar(),
      [&](const std::vector<std::size_t>& t) -> std::optional<Violation> {
        Poly diff = b.at(t[0], t[1]) - b.at(t[1], t[0]).substitute({{var::lm, neg}});
        if (diff.is_zero()) return std::nullopt;
        return Violation{"symmetry", Element(std::vector<Poly>{diff})};
      });
}

ModuleMap form_map(const BilinearForm& b) {
  b.validate();
  const std::size_t n = b.module.rank();
  ModuleMap s(b.module, b.module.dual());
  const std::map<VarId, Poly> bind{{var::lm, -Poly::var(var::d)}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.at(i, j) = b.at(i, j).substitute(bind);
  }
  return s;
}

CheckReport check_form_nondegenerate(const BilinearForm& b) {
  const Poly det = form_map(b).determinant();
  CheckReport rep;
  rep.subject = "nondegenerate";
  rep.residual_module = FreeModule::scalar();
  switch (classify_unit(det)) {
    case Invertibility::invertible:
      break;
    case Invertibility::generic:
      rep.notes.push_back("invertible for generic parameters: " + det.to_string() + " != 0");
      break;
    case Invertibility::singular:
      rep.verdict = false;
      rep.axiom_id = "determinant";
      rep.residual = Element(std::vector<Poly>{det});
      rep.notes.push_back("determinant " + det.to_string() + " is not a unit");
      break;
  }
  return rep;
}

Structure pseudo_hessian_structure(const Structure& s, const BilinearForm& b,
                                   std::vector<std::string>* notes) {
  for (const CheckReport& r : {check_form_symmetric(b), check_form_nondegenerate(b),
                               check_cocycle(b, s)}) {
    if (!r.verdict) throw InputError("form rejected: " + r.summary());
    if (notes) notes->insert(notes->end(), r.notes.begin(), r.notes.end());
  }
  const Bimodule dual = dual_bimodule(adjoint_bimodule(s));
  std::string genericity;
  const ModuleMap t = form_map(b).inverse(&genericity);
  return invertible_o_compatible_structure(t, dual, nullptr);
}

}  // namespace confalg
