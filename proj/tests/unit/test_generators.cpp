#include <gtest/gtest.h>

#include "dissalpha/generators.hpp"
#include "dissalpha/solvers.hpp"
#include "test_support.hpp"

using namespace dissalpha;

namespace {
bool regular(const Graph& g, std::size_t d) { return g.min_degree() == d && g.max_degree() == d; }
}  // namespace

TEST(Generators, Elementary) {
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(path_graph(1).size(), 0u);
  auto k = complete_bipartite(2, 3);
  EXPECT_EQ(k.size(), 6u);
  EXPECT_TRUE(is_bipartite(k));
  EXPECT_EQ(testsupport::brute_alpha(cycle_graph(5)), 2u);
  EXPECT_EQ(testsupport::brute_diss(cycle_graph(5)), 3u);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Generators, CliqueRings) {
  for (std::size_t k : {2, 3})
    for (std::size_t l : {2, 3}) {
      auto g = clique_ring(k, l);
      EXPECT_EQ(g.order(), 2 * k * l);
      EXPECT_TRUE(regular(g, 2 * k));
      EXPECT_EQ(testsupport::brute_alpha(g), l);
      EXPECT_EQ(testsupport::brute_diss(g), 2 * l);
      auto h = clique_ring_plus(k, l);
      EXPECT_TRUE(regular(h, 2 * k + 1));
      EXPECT_EQ(2 * testsupport::brute_alpha(h), testsupport::brute_diss(h));
    }
  EXPECT_THROW(clique_ring(1, 3), std::invalid_argument);
}

TEST(Generators, K4Star) {
  auto m = k4_star();
  EXPECT_EQ(m.graph.order(), 6u);
  std::vector<std::size_t> deg;
  for (Vertex v = 0; v < 6; ++v) deg.push_back(m.graph.degree(v));
  EXPECT_EQ(deg, (std::vector<std::size_t>{3, 3, 3, 3, 2, 2}));
  EXPECT_TRUE(is_dissociation_set(m.graph, m.marked));
  EXPECT_EQ(testsupport::brute_alpha(m.graph), 2u);
  EXPECT_EQ(testsupport::brute_diss(m.graph), 4u);
}

TEST(Generators, BlockGraphValidation) {
  using K = BlockKind;
  // marked-marked extra edge
  EXPECT_THROW(build_block_graph({{K::K2, K::K2}, {{0, 0, 1, 0}}}), std::invalid_argument);
  // inside one block
  EXPECT_THROW(build_block_graph({{K::K3}, {{0, 0, 0, 2}}}), std::invalid_argument);
  // disconnected
  EXPECT_THROW(build_block_graph({{K::K3, K::K3}, {}}), std::invalid_argument);
  auto ok = build_block_graph({{K::K3, K::K3}, {{0, 2, 1, 2}}});
  EXPECT_EQ(ok.graph.order(), 6u);
  EXPECT_EQ(ok.marked.size(), 4u);
  // degree overflow at a K3 apex
  EXPECT_THROW(build_block_graph({{K::K3, K::K2, K::K2}, {{0, 2, 1, 0}, {0, 2, 2, 0}}}), std::invalid_argument);
}

TEST(Generators, RandomFamiliesHaveTheirShape) {
  SplitMix64 rng(41);
  for (int t = 0; t < 100; ++t) {
    auto n = 1 + rng() % 20;
    auto s = random_subcubic(n, rng);
    EXPECT_LE(s.max_degree(), 3u);
    auto tf = random_connected_triangle_free_subcubic(n, rng);
    EXPECT_TRUE(is_connected(tf));
    EXPECT_TRUE(is_triangle_free(tf));
    EXPECT_LE(tf.max_degree(), 3u);
    auto c = random_cubic(6 + 2 * (rng() % 8), rng, t % 2 == 0);
    EXPECT_TRUE(regular(c, 3));
    if (t % 2 == 0) EXPECT_TRUE(is_triangle_free(c));
    auto b = build_block_graph(random_block_spec(5, rng));
    EXPECT_TRUE(is_connected(b.graph));
    EXPECT_LE(b.graph.max_degree(), 3u);
    EXPECT_TRUE(is_dissociation_set(b.graph, b.marked));
  }
}

TEST(Generators, SeedsReproduce) {
  SplitMix64 a(99), b(99);
  EXPECT_EQ(random_graph(15, 1, 2, a), random_graph(15, 1, 2, b));
  EXPECT_NE(SplitMix64::split(1, 0)(), SplitMix64::split(1, 1)());
}
