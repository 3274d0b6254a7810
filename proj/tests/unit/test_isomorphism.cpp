#include <gtest/gtest.h>

#include "dissalpha/generators.hpp"
#include "dissalpha/isomorphism.hpp"
#include "dissalpha/named_graphs.hpp"
#include "test_support.hpp"

using namespace dissalpha;

namespace {
std::vector<Vertex> shuffled(std::size_t n, SplitMix64& rng) {
  std::vector<Vertex> p(n);
  for (Vertex i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}
}  // namespace

TEST(Isomorphism, InvariantUnderRelabelling) {
  SplitMix64 rng(81);
  std::vector<Graph> graphs{named_graph("figl").graph, named_graph("petersen").graph, named_graph("heawood").graph,
                            clique_ring(3, 3), cycle_graph(30)};
  for (int t = 0; t < 30; ++t) graphs.push_back(random_cubic(20, rng));
  for (const auto& g : graphs) {
    auto perm = shuffled(g.order(), rng);
    auto h = relabel(g, perm);
    auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map.has_value());
    for (auto [u, v] : g.edges()) ASSERT_TRUE(h.adjacent((*map)[u], (*map)[v]));
  }
}

TEST(Isomorphism, DistinguishesCubicCorpus) {
  // corpus members are pairwise non-isomorphic
  auto graphs = testsupport::load_corpus("cubic_connected_n12.g6");
  ASSERT_EQ(graphs.size(), 85u);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) ASSERT_FALSE(is_isomorphic(graphs[i], graphs[j]));
}

TEST(Isomorphism, SameDegreesDifferentGraphs) {
  std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), Graph::from_edges(6, two_triangles)));
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), cycle_graph(7)));
  EXPECT_FALSE(is_isomorphic(complete_bipartite(3, 3), named_graph("c6").graph));
}

TEST(Isomorphism, ColoursAndMarkedSets) {
  auto g = path_graph(4);
  auto ends = VertexSet::from_list(4, std::vector<Vertex>{0, 3});
  auto mid = VertexSet::from_list(4, std::vector<Vertex>{1, 2});
  auto mixed = VertexSet::from_list(4, std::vector<Vertex>{0, 1});
  EXPECT_TRUE(is_isomorphic_marked(g, ends, g, ends));
  EXPECT_FALSE(is_isomorphic_marked(g, ends, g, mid));
  EXPECT_FALSE(is_isomorphic_marked(g, ends, g, mixed));
  EXPECT_THROW(find_isomorphism(g, g, {0, 1}, {0, 1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(find_isomorphism(Graph(65), Graph(65)), std::invalid_argument);
}
