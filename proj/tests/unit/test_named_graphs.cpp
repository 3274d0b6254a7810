#include <gtest/gtest.h>

#include "dissalpha/named_graphs.hpp"
#include "dissalpha/solvers.hpp"
#include "test_support.hpp"

using namespace dissalpha;

TEST(NamedGraphs, RecordedValuesMatchSolvers) {
  for (const auto& name : named_graph_names()) {
    auto g = named_graph(name);
    EXPECT_EQ(max_independent_set(g.graph).value, g.alpha) << name;
    EXPECT_EQ(max_dissociation_set(g.graph).value, g.diss) << name;
    if (g.graph.order() <= 22) {
      EXPECT_EQ(testsupport::brute_alpha(g.graph), g.alpha) << name;
      EXPECT_EQ(testsupport::brute_diss(g.graph), g.diss) << name;
    }
    if (g.marked) {
      EXPECT_TRUE(is_dissociation_set(g.graph, *g.marked)) << name;
      EXPECT_EQ(g.marked->size(), g.diss) << name;
    }
  }
}

TEST(NamedGraphs, Shapes) {
  auto fig3 = named_graph("fig3");
  auto c = classify(fig3.graph);
  EXPECT_TRUE(c.cubic && c.connected);
  EXPECT_EQ(fig3.graph.order(), 18u);
  auto figl = named_graph("figl");
  EXPECT_TRUE(classify(figl.graph).cubic);
  EXPECT_EQ(figl.graph.order(), 36u);
  auto tree = classify(named_graph("fig1_tree").graph);
  EXPECT_TRUE(tree.tree && tree.max_degree == 3);
  auto pet = classify(named_graph("petersen").graph);
  EXPECT_TRUE(pet.cubic && pet.triangle_free && !pet.bipartite);
  auto hea = classify(named_graph("heawood").graph);
  EXPECT_TRUE(hea.cubic && hea.bipartite);
  EXPECT_EQ(named_graph("c11").graph.order(), 11u);
  EXPECT_THROW(named_graph("nope"), std::invalid_argument);
  EXPECT_THROW(named_graph("c2"), std::invalid_argument);
}

TEST(NamedGraphs, Fig3MarkedSetIsFivePairs) {
  auto g = named_graph("fig3");
  auto p = diss_profile(g.graph, *g.marked);
  EXPECT_EQ(p.pairs, 5u);
  EXPECT_EQ(p.isolated, 0u);
}
