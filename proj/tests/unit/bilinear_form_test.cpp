#include <gtest/gtest.h>

#include "builders.hpp"
#include "confalg/axioms.hpp"
#include "confalg/bilinear_form.hpp"
#include "confalg/corpus.hpp"
#include "confalg/error.hpp"

namespace confalg {
namespace {

using testing::P;

TEST(BilinearForm, SesquilinearEvaluation) {
  BilinearForm b(FreeModule::numbered(1));
  b.at(0, 0) = P("lm + 1");
  const Element de(std::vector<Poly>{P("d")});
  const Element e = Element::basis(1, 0);
  const Poly lam = Poly::var(var::lm);
  EXPECT_EQ(evaluate_form(b, de, e, lam), P("-lm*(lm + 1)"));
  EXPECT_EQ(evaluate_form(b, e, de, lam), P("lm*(lm + 1)"));
}

TEST(BilinearForm, SymmetryAndNondegeneracy) {
  BilinearForm b(FreeModule::numbered(1));
  b.at(0, 0) = P("lm");
  EXPECT_FALSE(check_form_symmetric(b).verdict);
  EXPECT_FALSE(check_form_nondegenerate(b).verdict);
  b.at(0, 0) = P("lm^2 + 3");
  EXPECT_TRUE(check_form_symmetric(b).verdict);
  EXPECT_FALSE(check_form_nondegenerate(b).verdict);
  EXPECT_TRUE(check_form_nondegenerate(corpus::dual_numbers_form()).verdict);
}

TEST(BilinearForm, CorpusFormsAreCocycles) {
  EXPECT_TRUE(check_cocycle(corpus::unit_form(), corpus::current_unit()).verdict);
  EXPECT_TRUE(check_cocycle(corpus::dual_numbers_form(), corpus::current_dual_numbers()).verdict);
}

TEST(BilinearForm, PseudoHessianStructures) {
  const Structure u = pseudo_hessian_structure(corpus::current_unit(), corpus::unit_form());
  EXPECT_TRUE(check_axioms(u).verdict);
  const Structure dn =
      pseudo_hessian_structure(corpus::current_dual_numbers(), corpus::dual_numbers_form());
  EXPECT_TRUE(check_axioms(dn).verdict);
}

TEST(BilinearForm, PseudoHessianRefusesDegenerateForms) {
  BilinearForm b(FreeModule(std::vector<std::string>{"e"}));
  EXPECT_THROW(pseudo_hessian_structure(corpus::current_unit(), b), InputError);
}

}  // namespace
}  // namespace confalg
