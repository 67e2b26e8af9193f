// prune_test.cpp - the radius-preserving replacement subgraph: construction,
// choice logging, the five-part checklist, and idempotence.

#include "blockecc/prune.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "blockecc/fixtures.hpp"
#include "blockecc/generators.hpp"

namespace blockecc {
namespace {

TEST(Prune, RejectsBadInput) {
  EXPECT_THROW(prune(Graph(0)), std::invalid_argument);
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(prune(g), DisconnectedError);
}

TEST(Prune, SingleBlockIsIdentity) {
  for (const Graph& g : {Graph(1), gen::path(2), gen::cycle(6)}) {
    PruneResult r = prune(g);
    EXPECT_TRUE(r.identity());
    EXPECT_EQ(r.pruned, g);
    EXPECT_TRUE(r.choices.empty());
    EXPECT_TRUE(verify_replacement(g, r).all_passed());
    EXPECT_TRUE(prune_idempotent(r));
  }
}

TEST(Prune, SpiderDropsOneLeg) {
  // a=0, x=1, y=2, z=3, w=4; edges a-x, x-y, x-z, a-w. The component at the
  // central block {a,x} beyond x has two farthest vertices {y, z}; the
  // deterministic policy keeps y and the leg x-z is deleted.
  Graph g = fixtures::by_name("spiderz");
  BlockDecomposition dec = decompose(g);
  PruneResult r = prune(g);
  EXPECT_FALSE(r.identity());
  EXPECT_EQ(r.to_original, (std::vector<int>{0, 1, 2, 4}));
  EXPECT_EQ(r.deleted_blocks, (std::vector<int>{dec.block_of_edge(1, 3)}));
  EXPECT_EQ(r.pruned.vertex_count(), 4);
  EXPECT_EQ(r.pruned.edge_count(), 3);
  EXPECT_EQ(r.from_original[3], -1);
  EXPECT_EQ(r.map_vertex(r.from_original[2]), 2);

  ASSERT_EQ(r.choices.size(), 2u);
  const PruneChoice* at_x = nullptr;
  for (const PruneChoice& c : r.choices) {
    if (c.attachment == 1) at_x = &c;
  }
  ASSERT_NE(at_x, nullptr);
  EXPECT_EQ(at_x->candidates, (std::vector<int>{2, 3}));
  EXPECT_EQ(at_x->chosen, 2);
  EXPECT_EQ(at_x->geodesic, (std::vector<int>{2, 1}));

  ReplacementChecklist ck = verify_replacement(g, r);
  EXPECT_TRUE(ck.all_passed()) << (ck.failures.empty() ? "" : ck.failures.front());
  EXPECT_TRUE(prune_idempotent(r));
}

TEST(Prune, PolicyPicksOtherLeg) {
  Graph g = fixtures::by_name("spiderz");
  ChoicePolicy last = [](const std::vector<int>& cands) { return cands.back(); };
  PruneResult r = prune_with_choices(g, last);
  EXPECT_EQ(r.to_original, (std::vector<int>{0, 1, 3, 4}));
  EXPECT_TRUE(verify_replacement(g, r).all_passed());
  EXPECT_TRUE(prune_idempotent(r));
}

TEST(Prune, PolicyMustReturnCandidate) {
  Graph g = fixtures::by_name("spiderz");
  ChoicePolicy bogus = [](const std::vector<int>&) { return 99; };
  EXPECT_THROW(prune_with_choices(g, bogus), std::invalid_argument);
}

TEST(Prune, RandomPolicyIsDeterministic) {
  Graph g = fixtures::by_name("spiderz");
  PruneResult a = prune_with_choices(g, random_choice_policy(7));
  PruneResult b = prune_with_choices(g, random_choice_policy(7));
  EXPECT_EQ(a.pruned, b.pruned);
  EXPECT_EQ(a.to_original, b.to_original);
  EXPECT_TRUE(verify_replacement(g, a).all_passed());
}

TEST(Prune, FixturesAlreadyMinimalStayIdentity) {
  // Every leg of these fixtures reaches a farthest vertex, so nothing drops.
  for (const std::string& name : {"c4l", "hex", "pyr2", "tt4"}) {
    Graph g = fixtures::by_name(name);
    PruneResult r = prune(g);
    EXPECT_TRUE(r.identity()) << name;
    EXPECT_EQ(r.pruned, g) << name;
    EXPECT_TRUE(verify_replacement(g, r).all_passed()) << name;
    EXPECT_TRUE(prune_idempotent(r)) << name;
  }
}

TEST(Prune, BranchingLegCollapsesInCenteredTree) {
  // Tree 2-1-0-3 with extra leaves 4 and 5 on vertex 3: rad 2 = brad at the
  // central vertex 0, so one farthest leaf of {4, 5} is kept per component.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  BlockDecomposition dec = decompose(g);
  EccentricityReport rep = full_report(g, dec);
  ASSERT_EQ(rep.verdict.type, GraphType::A);
  ASSERT_EQ(rep.verdict.central_point, 0);

  PruneResult r = prune(g);
  EXPECT_EQ(r.deleted_blocks, (std::vector<int>{dec.block_of_edge(3, 5)}));
  EXPECT_EQ(r.to_original, (std::vector<int>{0, 1, 2, 3, 4}));
  const PruneChoice* at3 = nullptr;
  for (const PruneChoice& c : r.choices) {
    if (!c.candidates.empty() && c.candidates.front() == 4) at3 = &c;
  }
  ASSERT_NE(at3, nullptr);
  EXPECT_EQ(at3->candidates, (std::vector<int>{4, 5}));
  EXPECT_EQ(at3->geodesic, (std::vector<int>{4, 3, 0}));

  ReplacementChecklist ck = verify_replacement(g, r);
  EXPECT_TRUE(ck.all_passed());
  EXPECT_TRUE(ck.connected_subgraph);
  EXPECT_TRUE(ck.bc_subtree);
  EXPECT_TRUE(ck.path_or_starlike);
  EXPECT_TRUE(ck.invariants_preserved);
  EXPECT_TRUE(ck.periphery_and_diameter);
  EXPECT_TRUE(prune_idempotent(r));

  // The pruned graph is the path 2-1-0-3-4 with the same center.
  EccentricityReport rp = full_report(r.pruned);
  EXPECT_EQ(rp.rad, 2);
  EXPECT_EQ(rp.diam, 4);
  EXPECT_EQ(r.map_vertex(rp.center.front()), 0);
}

TEST(Prune, StarKeepsHubDegree) {
  GenSpec spec;
  spec.model = Model::Spider;
  spec.legs = {1, 1, 1, 1, 1, 1};
  Graph star = generate(spec);
  PruneResult r = prune(star);
  EXPECT_TRUE(r.identity());
  EXPECT_EQ(r.pruned.degree(0), 6);
}

TEST(Prune, ChecklistCatchesTampering) {
  Graph g = fixtures::by_name("spiderz");
  PruneResult r = prune(g);

  PruneResult bad_map = r;
  std::swap(bad_map.to_original[0], bad_map.to_original[1]);
  EXPECT_FALSE(verify_replacement(g, bad_map).all_passed());

  // A single kept vertex misses the radius and the center.
  PruneResult tiny;
  tiny.pruned = Graph(1);
  tiny.to_original = {0};
  tiny.from_original = {0, -1, -1, -1, -1};
  ReplacementChecklist ck = verify_replacement(g, tiny);
  EXPECT_FALSE(ck.all_passed());
  EXPECT_FALSE(ck.failures.empty());

  // An extra edge not present in the original graph is rejected.
  PruneResult fake = r;
  fake.pruned.add_edge(0, 2);
  EXPECT_FALSE(verify_replacement(g, fake).all_passed());
}

TEST(Prune, RandomCorpusPassesChecklist) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    GenSpec spec;
    spec.seed = split_seed(404, t);
    spec.n = 2 + static_cast<int>(t % 29);
    spec.model = (t % 3 == 0) ? Model::Tree : Model::Cactus;
    Graph g = generate(spec);
    PruneResult r = prune(g);
    ReplacementChecklist ck = verify_replacement(g, r);
    EXPECT_TRUE(ck.all_passed())
        << describe(spec) << ": " << (ck.failures.empty() ? "" : ck.failures.front());
    EXPECT_TRUE(prune_idempotent(r)) << describe(spec);
  }
}

}  // namespace
}  // namespace blockecc
