#pragma once

#include "confalg/check.hpp"
#include "confalg/module_map.hpp"
#include "confalg/structure.hpp"

namespace confalg {

/// A conformal bilinear form on a free module: entries B(i, j)(lm) give
/// B_lm(e_i, e_j) as polynomials in lm and parameters. Values on general
/// elements follow from B_lm(f e_i, g e_j) = f(-lm) g(lm) B_lm(e_i, e_j).
struct BilinearForm {
  FreeModule module;
  std::vector<Poly> entries;  // row-major rank x rank

  BilinearForm() = default;
  explicit BilinearForm(FreeModule m);
  Poly& at(std::size_t i, std::size_t j) { return entries.at(i * module.rank() + j); }
  const Poly& at(std::size_t i, std::size_t j) const { return entries.at(i * module.rank() + j); }
  void validate() const;
};

/// B_lam(x, y) for elements with coefficients in d (lam free of d).
Poly evaluate_form(const BilinearForm& b, const Element& x, const Element& y, const Poly& lam);

/// B_{lm+mu}(a o_lm b, c) - B_lm(a, b o_mu c) = B_{lm+mu}(b o_mu a, c) - B_mu(b, a o_lm c)
/// on basis triples; the residual is reported as a scalar with both sides in the notes.
CheckReport check_cocycle(const BilinearForm& b, const Structure& s,
                          const CheckOptions& options = {});
/// B_lm(e_i, e_j) = B_{-lm}(e_j, e_i).
CheckReport check_form_symmetric(const BilinearForm& b);
/// The map A -> A^*c, e_i -> sum_j B(i, j)(-d) e_j^*.
ModuleMap form_map(const BilinearForm& b);
/// Nondegenerate when det of form_map is a unit; parameter-monomial
/// determinants count as generic and are noted.
CheckReport check_form_nondegenerate(const BilinearForm& b);

/// L-dendriform structure from a nondegenerate symmetric 2-cocycle:
/// with S = form_map(B) and the dual bimodule (L* - R*, -R*),
/// a |> b = S^-1((L* - R*)(a)_lm S b), a <| b = S^-1(R*(a)_lm S b).
/// Throws when B fails any precondition.
Structure pseudo_hessian_structure(const Structure& s, const BilinearForm& b,
                                   std::vector<std::string>* notes = nullptr);

}  // namespace confalg
