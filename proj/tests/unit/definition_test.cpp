#include <gtest/gtest.h>

#include "builders.hpp"
#include "confalg/corpus.hpp"
#include "confalg/definition.hpp"
#include "confalg/error.hpp"

namespace confalg {
namespace {

using testing::P;

const char* kVir = R"({
  "parameters": ["c"],
  "basis": ["a"],
  "kind": "left-symmetric",
  "products": {"circ": [{"left": "a", "right": "a", "value": [{"basis": "a", "coeff": "lm + d + c"}]}]},
  "operators": {"R": {"domain": "A", "map": {"a": {"a": "2*d"}}},
                "T": {"domain": "A", "map": {"a": {"a": "lm"}}}},
  "tensors": {"r": [{"left": "a", "right": "a", "coeff": "d1 - d2"}]},
  "bilinear_forms": {"B": [{"left": "a", "right": "a", "coeff": "1"}]}
})";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

TEST(Definition, ParsesEverySection) {
  const Definition def = parse_definition(kVir);
  EXPECT_EQ(def.parameters, std::vector<std::string>{"c"});
  EXPECT_EQ(def.structure, corpus::virasoro(corpus::virasoro_c()));
  EXPECT_EQ(def.module_map("R").at(0, 0), P("2*d"));
  EXPECT_EQ(def.tensor("r").coeff(0, 0), P("d1 - d2"));
  EXPECT_EQ(def.form("B").at(0, 0), Poly(1L));
  EXPECT_FALSE(def.bimodule.has_value());
}

TEST(Definition, LambdaDependentOperatorIsNotAModuleMap) {
  const Definition def = parse_definition(kVir);
  EXPECT_EQ(def.operator_def("T").map.lambda_degree(), 1);
  EXPECT_THROW(def.module_map("T"), InputError);
  EXPECT_THROW(def.module_map("missing"), InputError);
  EXPECT_THROW(def.tensor("missing"), InputError);
}

TEST(Definition, DumpIsCanonicalAndRoundTrips) {
  const Definition def = parse_definition(kVir);
  const std::string once = dump_definition(def);
  const Definition again = parse_definition(once);
  EXPECT_EQ(dump_definition(again), once);
  EXPECT_EQ(again.structure, def.structure);
  EXPECT_EQ(once.back(), '\n');
}

TEST(Definition, MakeDefinitionCollectsParameters) {
  const Definition def = make_definition(corpus::lw(corpus::lw_generic_g()));
  EXPECT_EQ(def.parameters, (std::vector<std::string>{"g0", "g1", "g2"}));
  EXPECT_EQ(parse_definition(dump_definition(def)).structure, def.structure);
}

TEST(Definition, RejectsMalformedInput) {
  const std::string base = kVir;
  EXPECT_THROW(parse_definition("{"), InputError);
  EXPECT_THROW(parse_definition(replace(base, "\"tensors\"", "\"tensor\"")), InputError);
  EXPECT_THROW(parse_definition(replace(base, "lm + d + c", "lm + d + k")), InputError);
  EXPECT_THROW(parse_definition(replace(base, "\"basis\": \"a\", \"coeff\"", "\"basis\": \"b\", \"coeff\"")),
               InputError);
  EXPECT_THROW(parse_definition(replace(base, "left-symmetric", "jordan")), InputError);
  EXPECT_THROW(parse_definition(replace(base, "\"domain\": \"A\", \"map\": {\"a\": {\"a\": \"2*d\"}}",
                                        "\"domain\": \"V\", \"map\": {}")),
               InputError);
  EXPECT_THROW(parse_definition(R"({"basis": ["a"], "products": {}})"), InputError);
}

TEST(Definition, MaxDegreeIsEnforced) {
  const std::string high = replace(kVir, "lm + d + c", "lm^3 + d + c");
  LoadOptions opts;
  opts.max_degree = 2;
  EXPECT_THROW(parse_definition(high, opts), InputError);
  EXPECT_NO_THROW(parse_definition(high));
}

TEST(Definition, MissingFileIsAnInputError) {
  EXPECT_THROW(load_definition("/nonexistent/def.json"), InputError);
}

}  // namespace
}  // namespace confalg
