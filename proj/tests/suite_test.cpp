// suite_test.cpp - property registry, corpora, the suite runner, and the
// index fuzzer.

#include "blockecc/suite.hpp"

#include <algorithm>

#include <gtest/gtest.h>

namespace blockecc {
namespace {

TEST(Registry, FourteenProperties) {
  const std::vector<std::string>& names = all_property_names();
  EXPECT_EQ(names, (std::vector<std::string>{
                       "separation-additivity", "prop-becc", "prop-brad",
                       "central-block-theorem", "eccentric-location", "rd-bounds",
                       "self-centered", "replacement", "randic-agreement",
                       "randic-star-bound", "wedge-inequality", "leaf-block-monotone",
                       "cactus-randic", "upper-ecc-diam"}));
  EXPECT_THROW(run_property("nonsense", Graph(1), 0), std::invalid_argument);
}

TEST(Registry, EveryPropertyRunsOnEveryFixture) {
  for (const std::string& fix : fixtures::names()) {
    Graph g = fixtures::by_name(fix);
    for (const std::string& prop : all_property_names()) {
      EXPECT_TRUE(run_property(prop, g, 11).empty()) << prop << " on " << fix;
    }
  }
}

TEST(Corpora, DefaultStripesModels) {
  std::vector<GenSpec> specs = default_corpus(40, 7, 30);
  ASSERT_EQ(specs.size(), 40u);
  int cactus = 0, tree = 0, gnm = 0, grid = 0, fixture = 0;
  for (const GenSpec& s : specs) {
    switch (s.model) {
      case Model::Cactus: ++cactus; break;
      case Model::Tree: ++tree; break;
      case Model::ConnectedGnm: ++gnm; break;
      case Model::CycleWithPaths: ++grid; break;
      case Model::Fixture: ++fixture; break;
      default: FAIL() << "unexpected model " << model_name(s.model);
    }
    Graph g = generate(s);
    EXPECT_GE(g.vertex_count(), 1);
    EXPECT_LE(g.vertex_count(), 72);  // grid stripe tops out at n=6, l=5
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_EQ(cactus, 16);
  EXPECT_EQ(tree, 8);
  EXPECT_EQ(gnm, 8);
  EXPECT_EQ(grid, 4);
  EXPECT_EQ(fixture, 4);

  // Same arguments replay the same corpus; a new seed moves it.
  std::vector<GenSpec> again = default_corpus(40, 7, 30);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    EXPECT_EQ(describe(specs[i]), describe(again[i]));
  }
  std::vector<GenSpec> moved = default_corpus(40, 8, 30);
  bool any_different = false;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (describe(specs[i]) != describe(moved[i])) any_different = true;
  }
  EXPECT_TRUE(any_different);
}

TEST(Corpora, SizesAndModels) {
  EXPECT_EQ(fixture_corpus().size(), fixtures::names().size());
  EXPECT_EQ(grid_corpus().size(), 36u);
  for (const GenSpec& s : grid_corpus()) {
    EXPECT_EQ(s.model, Model::CycleWithPaths);
    generate(s);
  }
  std::vector<GenSpec> cacti = cactus_corpus(25, 3, 20);
  ASSERT_EQ(cacti.size(), 25u);
  for (const GenSpec& s : cacti) {
    EXPECT_EQ(s.model, Model::Cactus);
    EXPECT_TRUE(is_cactus(generate(s)));
  }
  for (const GenSpec& s : general_corpus(60, 3, 20)) generate(s);
}

TEST(Runner, FixtureCorpusIsClean) {
  SuiteReport rep = run_suite(fixture_corpus());
  EXPECT_EQ(rep.results.size(), 14u);
  EXPECT_TRUE(rep.passed());
  for (const PropertyResult& r : rep.results) {
    EXPECT_EQ(r.trials, static_cast<int>(fixtures::names().size()));
    EXPECT_GE(r.wall_ms, 0.0);
  }
}

TEST(Runner, GridCorpusIsClean) {
  SuiteReport rep = run_suite(grid_corpus(), {"rd-bounds", "central-block-theorem",
                                              "replacement", "cactus-randic"});
  EXPECT_EQ(rep.results.size(), 4u);
  EXPECT_TRUE(rep.passed());
}

TEST(Runner, UnknownPropertyIsRejected) {
  EXPECT_THROW(run_suite(fixture_corpus(), {"rd-bounds", "bogus"}), std::invalid_argument);
}

TEST(Runner, SmallDefaultCorpusCleanOutsideCactusRandic) {
  std::vector<std::string> props = all_property_names();
  props.erase(std::remove(props.begin(), props.end(), "cactus-randic"), props.end());
  SuiteReport rep = run_suite(default_corpus(150, 42, 30), props);
  EXPECT_TRUE(rep.passed()) << rep.results.front().name;
}

// Any cactus-randic violation is the known chemical-degree gap, never a
// metric or bound failure.
TEST(Runner, CactusRandicViolationsAreOnlyDegreeGaps) {
  SuiteReport rep = run_suite(cactus_corpus(150, 42, 30), {"cactus-randic"});
  for (const Violation& v : rep.results.front().violations) {
    EXPECT_NE(v.detail.find("degree"), std::string::npos) << describe(v.spec) << ": " << v.detail;
  }
}

TEST(Runner, ViolationSpecsReplay) {
  GenSpec spec;
  spec.model = Model::Spider;
  spec.legs = {1, 1, 1, 1, 1};
  Graph star5 = generate(spec);
  std::vector<std::string> fails = run_property("cactus-randic", star5, 0);
  ASSERT_EQ(fails.size(), 1u);
  EXPECT_NE(fails[0].find("degree"), std::string::npos);
}

TEST(Fuzz, EmptyRunPasses) {
  FuzzReport rep = fuzz_randic(0, 7, 30, 5);
  EXPECT_EQ(rep.trials, 0);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(rep.smallest.empty());
  EXPECT_TRUE(rep.even_paths.empty());
}

TEST(Fuzz, SeededRunFindsNoViolations) {
  FuzzReport rep = fuzz_randic(400, 7, 40, 6);
  EXPECT_EQ(rep.trials, 400);
  EXPECT_TRUE(rep.passed());
  ASSERT_LE(rep.smallest.size(), 6u);
  ASSERT_FALSE(rep.smallest.empty());
  for (std::size_t i = 1; i < rep.smallest.size(); ++i) {
    EXPECT_LE(rep.smallest[i - 1].slack_radius, rep.smallest[i].slack_radius);
  }
  EXPECT_GE(rep.min_slack, -kRandicTol);
  // Exempt entries really are even paths and sit below the plain bound.
  for (const FuzzEntry& e : rep.even_paths) {
    Graph g = generate(e.spec);
    EXPECT_TRUE(is_even_path(g)) << describe(e.spec);
    if (g.vertex_count() > 2) EXPECT_LT(e.slack_radius, 0.0);
  }
}

}  // namespace
}  // namespace blockecc
