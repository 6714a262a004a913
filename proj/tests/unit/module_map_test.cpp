#include <gtest/gtest.h>

#include "builders.hpp"
#include "confalg/error.hpp"
#include "confalg/module_map.hpp"

namespace confalg {
namespace {

using testing::P;

ModuleMap map2(const char* a, const char* b, const char* c, const char* d) {
  ModuleMap m(FreeModule::numbered(2), FreeModule::numbered(2));
  m.at(0, 0) = P(a);
  m.at(0, 1) = P(b);
  m.at(1, 0) = P(c);
  m.at(1, 1) = P(d);
  return m;
}

TEST(ModuleMap, RowConventionAndApply) {
  const ModuleMap m = map2("1", "d", "0", "2");
  EXPECT_EQ(m.image(0), Element(std::vector<Poly>{P("1"), P("d")}));
  // T(d e1 + e2) = d e1 + d^2 e2 + 2 e2.
  const Element v(std::vector<Poly>{P("d"), P("1")});
  EXPECT_EQ(m.apply(v), Element(std::vector<Poly>{P("d"), P("d^2 + 2")}));
}

TEST(ModuleMap, CompositionOrder) {
  const ModuleMap t = map2("0", "1", "0", "0");  // e1 -> e2
  const ModuleMap s = map2("0", "0", "d", "0");  // e2 -> d e1
  EXPECT_EQ(s.after(t), map2("d", "0", "0", "0"));
  EXPECT_EQ(t.after(s), map2("0", "0", "0", "d"));
}

TEST(ModuleMap, DeterminantAndInverse) {
  const ModuleMap m = map2("1", "d", "0", "2");
  EXPECT_EQ(m.determinant(), P("2"));
  const ModuleMap inv = m.inverse();
  EXPECT_EQ(inv.after(m), ModuleMap::identity(FreeModule::numbered(2)));
  EXPECT_EQ(m.after(inv), ModuleMap::identity(FreeModule::numbered(2)));
}

TEST(ModuleMap, GenericInverseRecordsCondition) {
  testing::param("pk");
  const ModuleMap m = map2("pk", "0", "d", "1");
  std::string note;
  const ModuleMap inv = m.inverse(&note);
  EXPECT_FALSE(note.empty());
  EXPECT_EQ(inv.after(m), ModuleMap::identity(FreeModule::numbered(2)));
}

TEST(ModuleMap, SingularMapsHaveNoInverse) {
  EXPECT_THROW(map2("d", "0", "0", "1").inverse(), InputError);
  EXPECT_THROW(map2("1", "1", "1", "1").inverse(), InputError);
}

TEST(ModuleMap, UnitClassification) {
  testing::param("pk");
  EXPECT_EQ(classify_unit(P("3")), Invertibility::invertible);
  EXPECT_EQ(classify_unit(P("2*pk^2")), Invertibility::generic);
  EXPECT_EQ(classify_unit(P("pk + 1")), Invertibility::singular);
  EXPECT_EQ(classify_unit(P("d")), Invertibility::singular);
  EXPECT_EQ(classify_unit(Poly()), Invertibility::singular);
}

}  // namespace
}  // namespace confalg
