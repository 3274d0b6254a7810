#include <gtest/gtest.h>

#include "dissalpha/generators.hpp"
#include "dissalpha/named_graphs.hpp"
#include "dissalpha/recognizers.hpp"
#include "test_support.hpp"

using namespace dissalpha;

TEST(BasicExtremal, Examples) {
  EXPECT_TRUE(is_basic_extremal(complete_graph(4)));
  EXPECT_FALSE(is_basic_extremal(cycle_graph(5)));
  EXPECT_TRUE(is_basic_extremal(clique_ring(2, 2)));
  EXPECT_TRUE(is_basic_extremal(named_graph("fig2_left").graph));
  EXPECT_TRUE(is_basic_extremal(named_graph("fig2_right").graph));
}

TEST(BlockDecomposition, Examples) {
  auto k3 = decompose_block_graph(complete_graph(3));
  ASSERT_TRUE(k3);
  ASSERT_EQ(k3->blocks.size(), 1u);
  EXPECT_EQ(k3->blocks[0].kind, BlockKind::K3);
  EXPECT_EQ(k3->marked.size(), 2u);
  auto k4 = decompose_block_graph(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_TRUE(k4->complete_graph_k4);
  auto left = decompose_block_graph(named_graph("fig2_left").graph);
  ASSERT_TRUE(left);
  std::size_t k4s = 0, k3s = 0;
  for (const auto& b : left->blocks) {
    k4s += b.kind == BlockKind::K4Star;
    k3s += b.kind == BlockKind::K3;
  }
  EXPECT_EQ(k4s, 1u);
  EXPECT_EQ(k3s, 2u);
  EXPECT_FALSE(decompose_block_graph(cycle_graph(5)));
  EXPECT_FALSE(decompose_block_graph(named_graph("petersen").graph));
  EXPECT_THROW(decompose_block_graph(complete_graph(5)), std::invalid_argument);
  EXPECT_THROW(decompose_block_graph(Graph(2)), std::invalid_argument);
}

TEST(BlockDecomposition, RecognisesRandomFamilyMembers) {
  SplitMix64 rng(91);
  for (int t = 0; t < 300; ++t) {
    auto m = build_block_graph(random_block_spec(6, rng));
    ASSERT_TRUE(is_basic_extremal(m.graph)) << to_string(m.graph);
    auto d = decompose_block_graph(m.graph);
    ASSERT_TRUE(d) << to_string(m.graph);
    ASSERT_EQ(check_decomposition(m.graph, *d), "");
  }
}

TEST(BlockDecomposition, CheckerCatchesTampering) {
  auto g = named_graph("fig2_right").graph;
  auto d = decompose_block_graph(g);
  ASSERT_TRUE(d);
  ASSERT_EQ(check_decomposition(g, *d), "");
  auto dropped = *d;
  dropped.extra_edges.pop_back();
  EXPECT_NE(check_decomposition(g, dropped), "");
  auto relabelled = *d;
  std::swap(relabelled.blocks[0].vertices[0], relabelled.blocks[0].vertices.back());
  if (relabelled.blocks[0].kind != BlockKind::K2) EXPECT_NE(check_decomposition(g, relabelled), "");
  auto fewer = *d;
  fewer.blocks.pop_back();
  EXPECT_NE(check_decomposition(g, fewer), "");
}

TEST(CubicProfile, FigureGraphs) {
  auto p = cubic_extremal_profile(named_graph("fig3").graph);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->violation, "");
  EXPECT_EQ(p->k, 1u);
  EXPECT_EQ(p->alpha, 6u);
  EXPECT_EQ(p->p, 0u);
  EXPECT_EQ(p->q, 5u);
  EXPECT_EQ(p->r, 4u);
  EXPECT_EQ(p->s, 2u);
  auto l = cubic_extremal_profile(named_graph("figl").graph);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->violation, "");
  EXPECT_EQ(l->k, 2u);
  EXPECT_EQ(l->q, 10u);
  EXPECT_FALSE(cubic_extremal_profile(named_graph("petersen").graph));
  EXPECT_THROW(cubic_extremal_profile(complete_graph(4)), std::invalid_argument);
  EXPECT_THROW(cubic_extremal_profile(cycle_graph(8)), std::invalid_argument);
}

TEST(GkWitness, Verification) {
  EXPECT_TRUE(verify_Gk_witness(named_graph("fig3").graph, named_witness("fig3")));
  EXPECT_TRUE(verify_Gk_witness(named_graph("figl").graph, named_witness("figl")));
  EXPECT_FALSE(verify_Gk_witness(named_graph("fig3").graph, named_witness("k2")));
  auto bad = named_witness("fig3");
  bad.k = 2;
  EXPECT_THROW(verify_Gk_witness(named_graph("fig3").graph, bad), std::invalid_argument);
}
