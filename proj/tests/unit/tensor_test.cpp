#include <gtest/gtest.h>

#include "builders.hpp"
#include "confalg/error.hpp"
#include "confalg/tensor.hpp"

namespace confalg {
namespace {

using testing::P;

TEST(Tensor, FlipSwapsFactorsAndDerivations) {
  TensorElement2 r(FreeModule::numbered(2));
  r.add(0, 0, P("d1"));
  const TensorElement2 f = flip(r);
  EXPECT_EQ(f.coeff(0, 0), P("d2"));
  EXPECT_FALSE(is_symmetric(r));
  EXPECT_TRUE(is_symmetric(r + f));
  EXPECT_EQ(flip(f), r);

  TensorElement2 s(FreeModule::numbered(2));
  s.add(0, 1, P("d1 - d2^2"));
  EXPECT_EQ(flip(s).coeff(1, 0), P("d2 - d1^2"));
  EXPECT_TRUE(flip(s).coeff(0, 1).is_zero());
}

TEST(Tensor, ZeroCoefficientsAreDropped) {
  TensorElement2 r(FreeModule::numbered(1));
  r.add(0, 0, P("d1"));
  r.add(0, 0, P("-d1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(r.add(0, 0, P("lm")), InputError);
  EXPECT_THROW(r.add(0, 0, P("d3")), InputError);
}

TEST(Tensor, TripleTensorsReduceModuloDiagonal) {
  TensorElement3 t(FreeModule::numbered(1));
  t.add(0, 0, 0, P("d1 + d2 + d3"));
  EXPECT_TRUE(t.is_zero());
  t.add(0, 0, 0, P("d3"));
  EXPECT_EQ(t.coeff(0, 0, 0), P("-d1 - d2"));
  EXPECT_EQ(t.reduced(), t);
}

TEST(Tensor, Rendering) {
  TensorElement2 r(FreeModule(std::vector<std::string>{"L", "W"}));
  r.add(0, 1, P("d1"));
  EXPECT_EQ(r.to_string(), "(d1)*L (x) W");
  EXPECT_EQ(TensorElement2(FreeModule::numbered(1)).to_string(), "0");
}

TEST(ConformalMap, LambdaDegreeAndSpecialisation) {
  ConformalMap t(FreeModule::numbered(1), FreeModule::numbered(1));
  EXPECT_TRUE(t.is_zero());
  t.at(0, 0) = P("lm^2 + lm*d + d + 2");
  EXPECT_EQ(t.lambda_degree(), 2);
  EXPECT_EQ(t.at_zero().at(0, 0), P("d + 2"));

  ModuleMap m(FreeModule::numbered(1), FreeModule::numbered(1));
  m.at(0, 0) = P("d");
  const ConformalMap c = ConformalMap::from_module_map(m);
  EXPECT_EQ(c.lambda_degree(), 0);
  EXPECT_EQ(c.at_zero(), m);
}

}  // namespace
}  // namespace confalg
