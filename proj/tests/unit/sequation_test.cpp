#include <gtest/gtest.h>

#include "builders.hpp"
#include "confalg/axioms.hpp"
#include "confalg/error.hpp"
#include "sequation_cases.hpp"

namespace confalg {
namespace {

using testing::P;

TEST(SEquation, VirasoroSquareTensorGolden) {
  // Hand expansion for a o_lm a = (lm + d) a and r = a (x) a:
  // (d1 + d2) - (d1 + d2) - (d3 + 2 d1) with d3 = -d1 - d2.
  const Structure vir = corpus::virasoro(Poly(0L));
  TensorElement2 r(vir.module);
  r.add(0, 0, Poly(1L));
  const TensorElement3 b = double_bracket(vir, r);
  EXPECT_EQ(b.coeff(0, 0, 0), P("-d1 + d2"));
  const CheckReport rep = check_s_equation(vir, r);
  ASSERT_FALSE(rep.verdict);
  EXPECT_EQ(rep.axiom_id, "s_equation");
  EXPECT_EQ(rep.witness, (std::vector<std::string>{"a", "a", "a"}));
}

TEST(SEquation, ZeroTensorSolves) {
  const Structure vir = corpus::virasoro(corpus::virasoro_c());
  EXPECT_TRUE(check_s_equation(vir, TensorElement2(vir.module)).verdict);
}

TEST(SEquation, RequiresLeftSymmetric) {
  const Structure s = zero_structure(FreeModule::numbered(1), Kind::lie);
  EXPECT_THROW(double_bracket(s, TensorElement2(s.module)), InputError);
}

TEST(SEquation, TFromRExamples) {
  TensorElement2 r(FreeModule::numbered(2));
  r.add(0, 1, Poly(1L));
  ConformalMap t = t_from_r(r);
  EXPECT_EQ(t.at(0, 1), Poly(1L));
  EXPECT_TRUE(t.at(1, 0).is_zero());

  TensorElement2 s(FreeModule::numbered(2));
  s.add(0, 0, P("d1"));
  EXPECT_EQ(t_from_r(s).at(0, 0), P("-lm - d"));
}

TEST(SEquation, RandomTAgreesWithOOperator) {
  std::mt19937_64 rng(2023);
  const auto algebras = testing::sequation_algebras();
  int truths = 0;
  for (int n = 0; n < 15; ++n) {
    const auto out = testing::sequation_case(rng, algebras[n % algebras.size()]);
    EXPECT_EQ(out.s_equation, out.o_operator) << "case " << n;
    EXPECT_TRUE(out.round_trip) << "case " << n;
    truths += out.o_operator;
  }
  EXPECT_GT(truths, 0);
}

TEST(SEquation, SymmetricRAgreesWithOOperatorOfTr) {
  std::mt19937_64 rng(2024);
  const auto algebras = testing::sequation_algebras();
  for (int n = 0; n < 15; ++n) {
    const auto [se, o] = testing::symmetric_r_case(rng, algebras[n % algebras.size()]);
    EXPECT_EQ(se, o) << "case " << n;
  }
}

TEST(SEquation, CanonicalSolutionOnInducedStructure) {
  for (LdFlavor f : {LdFlavor::vertical, LdFlavor::horizontal}) {
    const Structure ld = corpus::lw_type3_l_dendriform(Poly(1L), f);
    const auto [r, ambient] = canonical_r(ld, f);
    EXPECT_EQ(ambient.rank(), 4u);
    EXPECT_TRUE(is_symmetric(r));
    EXPECT_TRUE(check_axioms(ambient).verdict);
    EXPECT_TRUE(check_s_equation(ambient, r).verdict) << to_string(f);
  }
}

}  // namespace
}  // namespace confalg
