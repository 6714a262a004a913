#include <gtest/gtest.h>

#include "builders.hpp"
#include "confalg/axioms.hpp"
#include "confalg/bimodule.hpp"
#include "confalg/compatible.hpp"
#include "confalg/corpus.hpp"
#include "confalg/operators.hpp"
#include "random.hpp"

namespace confalg {
namespace {

TEST(Compatible, Type1AndType3AreCompatible) {
  const Structure lw = corpus::lw(corpus::lw_generic_g());
  const Bimodule adj = adjoint_bimodule(lw);
  const CompatibilityReport r =
      check_compatible_o_operators(corpus::lw_type(3), corpus::lw_type(1), adj);
  EXPECT_TRUE(r.mixed.verdict);
  EXPECT_TRUE(r.symbolic.verdict);
  EXPECT_TRUE(r.agree());
}

TEST(Compatible, NonOOperatorIsNotCompatible) {
  const Structure lw = corpus::lw(Poly(1L));
  const Bimodule adj = adjoint_bimodule(lw);
  const CompatibilityReport r =
      check_compatible_o_operators(corpus::lw_type(3), corpus::lw_bad_r(), adj);
  EXPECT_FALSE(r.verdict());
  EXPECT_TRUE(r.agree());
}

TEST(Compatible, RoutesAgreeOnRandomPairs) {
  std::mt19937_64 rng(41);
  const Structure lw = corpus::lw(Poly(1L));
  const Bimodule adj = adjoint_bimodule(lw);
  int compatible = 0;
  for (int n = 0; n < 30; ++n) {
    const ModuleMap t1 = testing::random_small_map(rng, lw.module, lw.module, 0.4);
    const ModuleMap t2 = testing::random_small_map(rng, lw.module, lw.module, 0.4);
    const CompatibilityReport r = check_compatible_o_operators(t1, t2, adj);
    compatible += r.verdict();
    EXPECT_TRUE(r.agree()) << t1.to_string() << " / " << t2.to_string();
  }
  EXPECT_GT(compatible, 0);
}

TEST(Compatible, InducedPairIsCompatibleLDendriform) {
  const Structure lw = corpus::lw(corpus::lw_generic_g());
  const Bimodule adj = adjoint_bimodule(lw);
  const auto [s1, s2] = compatible_pair_from_o_operators(corpus::lw_type(3), corpus::lw_type(1), adj);
  const LdCompatibilityReport r = check_compatible_l_dendriform(s1, s2);
  EXPECT_TRUE(r.verdict());
  EXPECT_TRUE(r.agree());
}

TEST(Compatible, QuotientOfEqualOperatorsIsIdentity) {
  const Structure lw = corpus::lw(corpus::lw_generic_g());
  const Bimodule adj = adjoint_bimodule(lw);
  const VarId a = VarRegistry::global().parameter("a");
  ModuleMap t(lw.module, lw.module);
  t.at(0, 0) = Poly::var(a).scaled(2);
  t.at(1, 1) = Poly::var(a);
  std::string note;
  const ModuleMap n = quotient_nijenhuis(t, t, &note);
  EXPECT_EQ(n, ModuleMap::identity(lw.module));
  EXPECT_FALSE(note.empty());
  EXPECT_TRUE(nt_check(n, t, adj).verdict);
  EXPECT_TRUE(check_nijenhuis(n, lw).verdict);
}

}  // namespace
}  // namespace confalg
