#include "phonogest/word.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace phonogest;

namespace {

std::string slurp(const std::string& rel) {
  std::ifstream f(std::string(PHONOGEST_SOURCE_DIR) + "/" + rel);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(ConfigText, SectionsEntriesContinuationsAndComments) {
  auto doc = ConfigDocument::parse(
      "# leading comment\n"
      "[atoms]\n"
      "a = x y   # trailing\n"
      "[constraint c]\n"
      "term = self:(x ;\n"
      "    y)\n"
      "term = again\n");
  ASSERT_EQ(doc.sections().size(), 2u);
  EXPECT_EQ(doc.sections()[0].kind, "atoms");
  EXPECT_EQ(doc.sections()[0].get("a"), "x y");
  const auto& c = doc.sections()[1];
  EXPECT_EQ(c.name, "c");
  EXPECT_EQ(c.get("term"), "self:(x ; y)");
  EXPECT_EQ(c.all("term").size(), 2u);
  EXPECT_EQ(c.get_or("missing", "d"), "d");
  EXPECT_THROW(c.get("missing"), ConfigError);
}

TEST(ConfigText, MalformedInputIsAConfigError) {
  EXPECT_THROW(ConfigDocument::parse("key = value\n"), ConfigError);
  EXPECT_THROW(ConfigDocument::parse("[open\n"), ConfigError);
  EXPECT_THROW(ConfigDocument::parse("[]\n"), ConfigError);
  EXPECT_THROW(ConfigDocument::parse("[a]\nno equals sign\n"), ConfigError);
  EXPECT_THROW(ConfigDocument::parse("[a]\n = v\n"), ConfigError);
  EXPECT_THROW(ConfigDocument::load("/nonexistent/file.cfg"), ConfigError);
}

TEST(ConfigText, Splitting) {
  EXPECT_EQ(split_words("  a  b\tc "), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(split_on(" a | b || c ", '|'), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Defaults, EmbeddedTextMatchesShippedFiles) {
  EXPECT_EQ(slurp("config/lattice.cfg"), std::string(defaults::kDefaultLattice));
  EXPECT_EQ(slurp("config/inventory.cfg"), std::string(defaults::kDefaultInventory));
  EXPECT_EQ(slurp("config/parameters.cfg"), std::string(defaults::kDefaultParameters));
}

TEST(Defaults, DirectoryAndBuiltInAgree) {
  Model a = Model::defaults();
  Model b = Model::from_directory(std::string(PHONOGEST_SOURCE_DIR) + "/config");
  EXPECT_EQ(a.inventory.segments().size(), b.inventory.segments().size());
  EXPECT_EQ(a.lattice().type_names(), b.lattice().type_names());
  EXPECT_THROW(Model::from_directory("/nonexistent"), ConfigError);
}

TEST(ParameterTableConfig, ReadsClassesTractsAndRoleOverrides) {
  auto p = ParameterTable::from_config(ConfigDocument::parse(std::string(defaults::kDefaultParameters) +
                                                             "\n[class special]\neigenperiod_ms = 100\nassoc_deg = 90\n"
                                                             "release_deg = 300\nassoc_deg.pure_coda = 120\n"));
  auto t = p.constants("special", "pure_onset");
  EXPECT_EQ(t.assoc, Rational(90));
  EXPECT_EQ(p.constants("special", "pure_coda").assoc, Rational(120));
  EXPECT_EQ(p.constants("special", "pure_coda").release, Rational(300));
  EXPECT_THROW(p.constants("nope", "nucleus"), ConfigError);
  EXPECT_EQ(p.tract(TractVariable::GA).code, 10);
  EXPECT_EQ(p.tract(TractVariable::LA).code, 2);
}

TEST(ParameterTableConfig, RejectsBadValues) {
  const std::string base(defaults::kDefaultParameters);
  auto bad = [&](const std::string& extra) { return ConfigDocument::parse(base + "\n" + extra); };
  EXPECT_THROW(ParameterTable::from_config(bad("[class z]\neigenperiod_ms = 0\nassoc_deg = 0\nrelease_deg = 90\n")),
               ConfigError);
  EXPECT_THROW(ParameterTable::from_config(bad("[class z]\neigenperiod_ms = 10\nassoc_deg = 0\nrelease_deg = 0\n")),
               ConfigError);
  EXPECT_THROW(ParameterTable::from_config(bad("[class z]\neigenperiod_ms = 10\nassoc_deg = 200\nrelease_deg = 100\n")),
               ConfigError);
  EXPECT_THROW(ParameterTable::from_config(bad("[class z]\neigenperiod_ms = 10\nassoc_deg = 0\nrelease_deg = 721\n")),
               ConfigError);
  EXPECT_THROW(ParameterTable::from_config(bad("[class z]\neigenperiod_ms = ten\nassoc_deg = 0\nrelease_deg = 1\n")),
               ConfigError);
  EXPECT_THROW(ParameterTable::from_config(bad("[tract XX]\nneutral = 0\nmin = 0\nmax = 1\ncode = 1\n")), ConfigError);
  EXPECT_THROW(ParameterTable::from_config(bad("[tract GA]\nneutral = 5\nmin = 0\nmax = 1\ncode = 10\n")), ConfigError);
  EXPECT_THROW(ParameterTable::from_config(ConfigDocument::parse("[tract GA]\nneutral = 0\nmin = 0\nmax = 1\ncode = 10\n")),
               ConfigError);  // other tract variables missing
}

TEST(GrammarConfig, RequiredTypesAndConstraintChecks) {
  const std::string base(defaults::kDefaultLattice);
  EXPECT_NO_THROW(Grammar::from_config(ConfigDocument::parse(base)));
  EXPECT_THROW(Grammar::from_config(ConfigDocument::parse("[atoms]\na = x\n")), ConfigError);
  EXPECT_THROW(Grammar::from_config(ConfigDocument::parse(base + "\n[constraint bad]\nterm = self:unknown_type\n")),
               ConfigError);
  EXPECT_THROW(Grammar::from_config(ConfigDocument::parse(base + "\n[constraint loop]\nterm = self:loop\n")),
               ConfigError);
  EXPECT_THROW(Grammar::from_config(ConfigDocument::parse(base + "\n[constraint coda]\nterm = self:nucleus\n")),
               ConfigError);
}

TEST(GrammarConfig, MacrosExpandWithVariablePrefix) {
  auto g = Grammar::from_config(ConfigDocument::parse(std::string(defaults::kDefaultLattice) +
                                                      "\n[constraint both]\nterm = final_devoicing & voiced_in_onset\n"
                                                      "[constraint timed]\nterm = self:start:S & equal(S, 1)\n"));
  EXPECT_EQ(g.instantiate("both", "p.").str(),
            FeatureTerm::conj({final_devoicing(), voiced_in_onset()}).str());
  EXPECT_NE(g.instantiate("timed", "p.").str().find("p.S"), std::string::npos);
}

TEST(InventoryConfig, RejectsInconsistentEntries) {
  auto grammar = std::make_shared<const Grammar>(Grammar::from_config(ConfigDocument::parse(defaults::kDefaultLattice)));
  auto params = ParameterTable::from_config(ConfigDocument::parse(defaults::kDefaultParameters));
  const std::string base(defaults::kDefaultInventory);
  auto load = [&](const std::string& extra) {
    return SegmentInventory::from_config(ConfigDocument::parse(base + "\n" + extra), grammar, params);
  };
  EXPECT_NO_THROW(load(""));
  EXPECT_THROW(load("[segment a]\nclass = vowel\nprimary = tract=TH cd=open cl=x target=3 class=vocalic\n"),
               ConfigError);  // duplicate id
  EXPECT_THROW(load("[segment q]\nclass = nothing\nprimary = tract=TH cd=open cl=x target=3 class=vocalic\n"),
               ConfigError);
  EXPECT_THROW(load("[segment q]\nclass = vowel\nprimary = tract=TH cd=open cl=x target=3 class=nope\n"),
               ConfigError);
  EXPECT_THROW(load("[segment q]\nclass = vowel\nprimary = tract=TH cd=open cl=x target=99 class=vocalic clip=none\n"),
               ConfigError);
  EXPECT_THROW(load("[segment q]\nclass = vowel\nalternating = yes\n"
                    "primary = tract=TH cd=open cl=x target=3 class=vocalic\n"),
               ConfigError);
  EXPECT_THROW(load("[segment q]\nclass = sonorant\nsecondary = inactive | nope\n"
                    "primary = tract=TH cd=open cl=x target=3 class=sonorant\n"),
               ConfigError);
  EXPECT_THROW(load("[segment q]\nclass = sonorant\nconstraints = nope\n"
                    "primary = tract=TH cd=open cl=x target=3 class=sonorant\n"),
               ConfigError);
  EXPECT_THROW(load("[onsets]\ncluster = b zz\n"), ConfigError);
  EXPECT_THROW(load("[onsets]\ncluster = b\n"), ConfigError);
}

TEST(GestureSpecText, ParsesAndRejects) {
  auto g = parse_gesture_spec("tract=LA cd=closed cl=lips target=-2 class=stop clip=default", "t");
  EXPECT_EQ(g.tract, TractVariable::LA);
  EXPECT_EQ(g.cd, "closed");
  EXPECT_EQ(g.cl, "lips");
  EXPECT_DOUBLE_EQ(g.target, -2);
  EXPECT_EQ(g.gesture_class, "stop");
  EXPECT_EQ(g.clip, ClipMode::clip_default);
  EXPECT_THROW(parse_gesture_spec("tract=XX cd=a cl=b target=1 class=stop", "t"), ConfigError);
  EXPECT_THROW(parse_gesture_spec("tract=LA cd=a cl=b target=x class=stop", "t"), ConfigError);
  EXPECT_THROW(parse_gesture_spec("tract=LA cd=a cl=b target=1 class=stop clip=maybe", "t"), ConfigError);
  EXPECT_THROW(parse_gesture_spec("tract=LA cd=a cl=b target=1", "t"), ConfigError);
}
