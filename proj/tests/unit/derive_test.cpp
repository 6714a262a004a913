#include <gtest/gtest.h>

#include "builders.hpp"
#include "confalg/axioms.hpp"
#include "confalg/corpus.hpp"
#include "confalg/derive.hpp"
#include "confalg/error.hpp"

namespace confalg {
namespace {

using testing::P;

TEST(Derive, ConversionNamesRoundTrip) {
  for (Conversion c :
       {Conversion::commutator, Conversion::horizontal, Conversion::vertical, Conversion::transpose,
        Conversion::dendriform_ld, Conversion::dendriform_sum, Conversion::quadri_succ_prec,
        Conversion::quadri_vee_wedge, Conversion::quadri_star, Conversion::quadri_ld}) {
    EXPECT_EQ(parse_conversion(to_string(c)), c);
  }
  EXPECT_THROW(parse_conversion("nonsense"), InputError);
}

TEST(Derive, WrongKindIsRejected) {
  EXPECT_THROW(horizontal(corpus::virasoro(Poly(0L))), InputError);
  EXPECT_THROW(quadri_star(testing::projection_dendriform()), InputError);
}

TEST(Derive, LDendriformProductsAreLeftSymmetric) {
  for (LdFlavor f : {LdFlavor::vertical, LdFlavor::horizontal}) {
    const Structure ld = corpus::lw_type3_l_dendriform(corpus::lw_generic_g(), f);
    ASSERT_TRUE(check_axioms(ld).verdict);
    EXPECT_TRUE(check_axioms(horizontal(ld)).verdict);
    EXPECT_TRUE(check_axioms(vertical(ld)).verdict);
    EXPECT_TRUE(check_axioms(transpose_l_dendriform(ld)).verdict);
    EXPECT_TRUE(check_axioms(commutator_lie(ld)).verdict);
  }
}

TEST(Derive, TransposeIsAnInvolution) {
  const Structure ld = corpus::lw_type3_l_dendriform(corpus::lw_generic_g(), LdFlavor::vertical);
  EXPECT_EQ(transpose_l_dendriform(transpose_l_dendriform(ld)), ld);
  // The horizontal product of the transpose is the vertical product.
  EXPECT_EQ(horizontal(transpose_l_dendriform(ld)).op("circ"), vertical(ld).op("circ"));
}

TEST(Derive, DendriformConversions) {
  const Structure d = testing::projection_dendriform();
  const Structure sum = dendriform_sum(d);
  EXPECT_EQ(sum.kind, Kind::associative);
  EXPECT_EQ(sum.op("circ").at(0, 0, 0), Poly(1L));
  EXPECT_EQ(sum.op("circ").at(1, 1, 1), Poly(-1L));
  EXPECT_TRUE(check_axioms(sum).verdict);
  EXPECT_TRUE(check_axioms(dendriform_as_l_dendriform(d)).verdict);
}

TEST(Derive, QuadriConversions) {
  const Structure d = testing::projection_dendriform();
  const Structure q = testing::tensor_quadri(d, d);
  for (Conversion c : {Conversion::quadri_succ_prec, Conversion::quadri_vee_wedge,
                       Conversion::quadri_star, Conversion::quadri_ld}) {
    const Structure out = derive_structure(q, c);
    EXPECT_TRUE(check_axioms(out).verdict) << to_string(c);
  }
  // succ + prec and vee + wedge both give the star product.
  EXPECT_EQ(dendriform_sum(quadri_succ_prec(q)).op("circ"), quadri_star(q).op("circ"));
  EXPECT_EQ(dendriform_sum(quadri_vee_wedge(q)).op("circ"), quadri_star(q).op("circ"));
}

TEST(Derive, CommutatorOfLw) {
  const Structure lie = commutator_lie(corpus::lw(Poly(1L)));
  // [L_lm L] = lm W - (-d - lm) W.
  EXPECT_EQ(lie.op("bracket").at(0, 0, 1), P("2*lm + d"));
  EXPECT_TRUE(check_axioms(lie).verdict);
}

}  // namespace
}  // namespace confalg
