#include <gtest/gtest.h>

#include <filesystem>

#include "confalg/axioms.hpp"
#include "confalg/bimodule.hpp"
#include "confalg/corpus.hpp"
#include "confalg/definition.hpp"
#include "confalg/operators.hpp"

namespace confalg {
namespace {

std::string corpus_file(const std::string& name) {
  return std::string(CONFALG_CORPUS_DIR) + "/" + name;
}

TEST(Corpus, EveryFileLoadsAndOnlyTheNegativeControlFails) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(CONFALG_CORPUS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const Definition def = load_definition(entry.path().string());
    const bool ok = check_axioms(def.structure).verdict;
    const bool negative = entry.path().filename() == "bad_current.json";
    EXPECT_EQ(ok, !negative) << entry.path();
    if (def.bimodule) EXPECT_TRUE(check_bimodule(*def.bimodule).verdict) << entry.path();
  }
  EXPECT_GE(files, 9);
}

TEST(Corpus, FilesMatchBuiltins) {
  EXPECT_EQ(load_definition(corpus_file("vir.json")).structure,
            corpus::virasoro(corpus::virasoro_c()));
  EXPECT_EQ(load_definition(corpus_file("lw.json")).structure,
            corpus::lw(corpus::lw_generic_g()));
  EXPECT_EQ(load_definition(corpus_file("bad_current.json")).structure, corpus::bad_current());
  EXPECT_EQ(load_definition(corpus_file("lw_type3_ld.json")).structure,
            corpus::lw_type3_l_dendriform(corpus::lw_generic_g(), LdFlavor::vertical));
}

TEST(Corpus, LwOperatorsInFile) {
  const Definition def = load_definition(corpus_file("lw.json"));
  for (const char* name : {"zero", "type1", "type2", "type3"}) {
    EXPECT_TRUE(check_rota_baxter(def.module_map(name), def.structure, Poly()).verdict) << name;
  }
  EXPECT_EQ(def.module_map("type3"), corpus::lw_type(3));
}

}  // namespace
}  // namespace confalg
