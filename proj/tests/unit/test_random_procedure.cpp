#include <gtest/gtest.h>

#include "dissalpha/generators.hpp"
#include "dissalpha/named_graphs.hpp"
#include "dissalpha/random_procedure.hpp"
#include "dissalpha/solvers.hpp"
#include "test_support.hpp"

using namespace dissalpha;

TEST(PartitionStats, Examples) {
  auto pet = named_graph("petersen").graph;
  auto D = max_dissociation_set(pet).witness;
  auto st = diss_partition_stats(pet, D);
  EXPECT_EQ(st.p, 0u);
  EXPECT_EQ(st.q, 3u);
  EXPECT_EQ(st.r, (std::vector<std::size_t>{0, 0, 0, 4}));
  EXPECT_EQ(expected_I2_exact(st), Rational(1, 2));

  auto fig3 = named_graph("fig3");
  auto s3 = diss_partition_stats(fig3.graph, *fig3.marked);
  EXPECT_EQ(s3.p, 0u);
  EXPECT_EQ(s3.q, 5u);

  auto c6 = cycle_graph(6);
  auto indep = VertexSet::from_list(6, std::vector<Vertex>{0, 2, 4});
  auto si = diss_partition_stats(c6, indep);
  EXPECT_EQ(si.q, 0u);
  EXPECT_TRUE(si.D1.empty());
  EXPECT_EQ(si.r[0], 3u);
  EXPECT_EQ(expected_I2_exact(si), Rational(6, 3));

  auto path3 = VertexSet::from_list(6, std::vector<Vertex>{0, 1, 2});
  EXPECT_THROW(diss_partition_stats(c6, path3), std::invalid_argument);
}

TEST(ExpectedI2, FormulaReductions) {
  PartitionStats st;
  st.max_degree = 3;
  st.p = 5;
  st.r = {0, 0, 0, 0};
  EXPECT_EQ(expected_I2_exact(st), Rational(5, 4));
  st.p = 0;
  EXPECT_EQ(expected_I2_exact(st), Rational(0));
  st.r = {1, 1, 1, 1};
  EXPECT_EQ(expected_I2_exact(st), Rational(1, 4) + Rational(1, 6) + Rational(1, 8) + Rational(1, 8));
  st.max_degree = 0;
  EXPECT_THROW(expected_I2_exact(st), std::invalid_argument);
}

TEST(ExpectedI2, PerVertexSumMatchesFormulaOnRegularGraphs) {
  SplitMix64 rng(101);
  for (int t = 0; t < 30; ++t) {
    auto g = random_cubic(6 + 2 * (rng() % 8), rng, true);
    auto D = max_dissociation_set(g).witness;
    EXPECT_EQ(expected_I2_per_vertex(g, D), expected_I2_exact(diss_partition_stats(g, D)));
  }
}

TEST(Procedure, AlwaysIndependent) {
  // including graphs with triangles and irregular degrees
  SplitMix64 rng(103);
  for (int t = 0; t < 300; ++t) {
    auto g = random_graph(3 + rng() % 15, 1 + rng() % 3, 5, rng);
    auto D = max_dissociation_set(g).witness;
    for (int s = 0; s < 20; ++s) {
      auto I = sample_independent_set(g, D, rng());
      ASSERT_TRUE(is_independent_set(g, I));
    }
  }
  auto k33 = complete_bipartite(3, 3);
  auto side = VertexSet::from_list(6, std::vector<Vertex>{0, 1, 2});
  for (std::uint64_t seed = 0; seed < 200; ++seed) ASSERT_TRUE(is_independent_set(k33, sample_independent_set(k33, side, seed)));
}

TEST(Procedure, IndependentDReducesToPermutationRule) {
  auto g = cycle_graph(7);
  auto D = VertexSet::from_list(7, std::vector<Vertex>{0, 2, 4});
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto d = sample_procedure(g, D, rng);
    EXPECT_TRUE(d.I1.empty());
    EXPECT_FALSE(d.I2.empty());
  }
}

TEST(MonteCarlo, DeterministicAcrossWorkerCounts) {
  auto g = named_graph("heawood").graph;
  auto D = max_dissociation_set(g).witness;
  auto a = montecarlo_I2(g, D, 5000, 77, 1);
  auto b = montecarlo_I2(g, D, 5000, 77, 3);
  EXPECT_EQ(a.sum, b.sum);
  EXPECT_EQ(a.sum_squares, b.sum_squares);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_THROW(montecarlo_I2(g, D, 0, 1), std::invalid_argument);
}

TEST(MonteCarlo, SingleTrialEqualsDraw) {
  auto g = named_graph("petersen").graph;
  auto D = max_dissociation_set(g).witness;
  auto r = montecarlo_I2(g, D, 1, 9);
  auto rng = SplitMix64::split(9, 0);
  auto d = sample_procedure(g, D, rng);
  EXPECT_EQ(r.mean(), Rational(d.I2.size()));
  EXPECT_EQ(r.stderr_squared(), Rational(0));
}

TEST(MonteCarlo, HeawoodMeanAndFrequencies) {
  auto g = named_graph("heawood").graph;
  auto D = max_dissociation_set(g).witness;
  auto r = montecarlo_I2(g, D, 100000, 2024);
  EXPECT_EQ(r.exact_expectation, expected_I2_exact(diss_partition_stats(g, D)));
  EXPECT_TRUE(r.mean_within(4));
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_TRUE(r.frequency_within(v, inclusion_probability(g, D, v), 4)) << v;
}
