#include <gtest/gtest.h>

#include "dissalpha/enumerate.hpp"
#include "dissalpha/generators.hpp"
#include "dissalpha/named_graphs.hpp"
#include "dissalpha/rng.hpp"
#include "dissalpha/solvers.hpp"
#include "test_support.hpp"

using namespace dissalpha;
using testsupport::brute_alpha;
using testsupport::brute_diss;

TEST(Oracles, AgreeWithReferenceEnumeration) {
  SplitMix64 rng(5);
  for (int t = 0; t < 300; ++t) {
    auto g = random_graph(1 + rng() % 14, 1 + rng() % 3, 4, rng);
    ASSERT_EQ(oracle_mis(g), brute_alpha(g));
    ASSERT_EQ(oracle_diss(g), brute_diss(g));
  }
  EXPECT_EQ(oracle_diss(cycle_graph(6)), 4u);
  EXPECT_THROW(oracle_mis(Graph(kOracleMaxOrder + 1)), std::invalid_argument);
}

TEST(Solvers, SmallValues) {
  EXPECT_EQ(max_independent_set(complete_graph(4)).value, 1u);
  EXPECT_EQ(max_dissociation_set(complete_graph(4)).value, 2u);
  for (std::size_t n = 3; n <= 20; ++n) {
    EXPECT_EQ(max_independent_set(cycle_graph(n)).value, n / 2) << n;
    EXPECT_EQ(max_dissociation_set(cycle_graph(n)).value, 2 * n / 3) << n;
  }
  EXPECT_EQ(max_independent_set(Graph(0)).value, 0u);
  EXPECT_EQ(max_dissociation_set(Graph(0)).value, 0u);
  EXPECT_EQ(max_independent_set(Graph(5)).value, 5u);
  EXPECT_EQ(max_dissociation_set(complete_bipartite(3, 3)).value, 3u);
}

TEST(Solvers, EqualOraclesOnAllGraphsUpToSeven) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EnumerateFilter all;
    all.connected = false;
    for (const auto& g : enumerate_graphs(n, all)) {
      auto a = max_independent_set(g);
      auto d = max_dissociation_set(g);
      ASSERT_EQ(a.value, oracle_mis(g)) << to_string(g);
      ASSERT_EQ(d.value, oracle_diss(g)) << to_string(g);
      ASSERT_TRUE(is_independent_set(g, a.witness));
      ASSERT_TRUE(is_dissociation_set(g, d.witness));
      ASSERT_EQ(a.witness.size(), a.value);
      ASSERT_EQ(d.witness.size(), d.value);
    }
  }
}

TEST(Solvers, EqualOraclesOnRandomGraphs) {
  SplitMix64 rng(17);
  for (int t = 0; t < 300; ++t) {
    auto n = 2 + rng() % 17;
    auto g = random_graph(n, 1 + rng() % 5, 6, rng);
    ASSERT_EQ(max_independent_set(g).value, oracle_mis(g)) << to_string(g);
    ASSERT_EQ(max_dissociation_set(g).value, oracle_diss(g)) << to_string(g);
  }
}

TEST(Solvers, DeterministicWitnesses) {
  auto g = named_graph("fig3").graph;
  EXPECT_EQ(max_dissociation_set(g).witness, max_dissociation_set(g).witness);
  EXPECT_EQ(max_independent_set(g).witness, max_independent_set(g).witness);
}

TEST(Solvers, LimitsAndDeadline) {
  EXPECT_THROW(max_independent_set(Graph(kSolverMaxOrder + 1)), std::invalid_argument);
  EXPECT_THROW(max_dissociation_set(Graph(kSolverMaxOrder + 1)), std::invalid_argument);
  SplitMix64 rng(2);
  auto g = random_graph(60, 1, 2, rng);
  SolveOptions past;
  past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(max_dissociation_set(g, past), SolveTimeout);
  EXPECT_THROW(max_independent_set(g, past), SolveTimeout);
}

TEST(Certificate, MaximizesIsolatedAmongMaximumSets) {
  SplitMix64 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto g = random_subcubic(2 + rng() % 13, rng);
    auto c = max_diss_max_isolated(g);
    ASSERT_EQ(c.D.size(), brute_diss(g));
    ASSERT_TRUE(c.complement_is_dissociation);
    auto prof = diss_profile(g, c.D);
    ASSERT_EQ(prof.isolated, c.p);
    ASSERT_EQ(prof.pairs, c.q);
    auto rest = diss_profile(g, c.D.complement());
    ASSERT_EQ(rest.isolated, c.r);
    ASSERT_EQ(rest.pairs, c.s);
    ASSERT_EQ(g.order(), c.p + 2 * c.q + c.r + 2 * c.s);
    // no maximum dissociation set has more isolated vertices
    auto adj = testsupport::words(g);
    for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
      if (static_cast<std::size_t>(__builtin_popcount(s)) != c.D.size()) continue;
      std::size_t iso = 0;
      bool ok = true;
      for (std::uint32_t w = s; w && ok; w &= w - 1) {
        int d = __builtin_popcount(adj[__builtin_ctz(w)] & s);
        ok = d <= 1;
        iso += d == 0;
      }
      if (ok) ASSERT_LE(iso, c.p) << to_string(g);
    }
  }
}

TEST(Certificate, CubicCutIdentity) {
  SplitMix64 rng(29);
  for (int t = 0; t < 40; ++t) {
    auto g = random_cubic(4 + 2 * (rng() % 8), rng);
    auto c = max_diss_max_isolated(g);
    auto id = edge_count_identity(g, c);
    EXPECT_EQ(id.from_d, 3 * c.p + 4 * c.q);
    EXPECT_EQ(id.from_d, id.from_complement);
    EXPECT_EQ(id.cut_edges, id.from_d);
  }
  auto fig3 = named_graph("fig3").graph;
  auto c = max_diss_max_isolated(fig3);
  EXPECT_EQ(c.p, 0u);
  EXPECT_EQ(c.q, 5u);
  EXPECT_EQ(c.r, 4u);
  EXPECT_EQ(c.s, 2u);
  EXPECT_THROW(edge_count_identity(cycle_graph(6), max_diss_max_isolated(cycle_graph(6))), std::invalid_argument);
}
