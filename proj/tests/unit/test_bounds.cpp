#include <gtest/gtest.h>

#include "dissalpha/bounds.hpp"
#include "dissalpha/generators.hpp"
#include "dissalpha/named_graphs.hpp"

using namespace dissalpha;

TEST(Bounds, RationalFormatting) {
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-1, 4)), "-1/4");
}

TEST(Bounds, Constants) {
  EXPECT_EQ(triangle_free_regular_factor(3), Rational(11, 20));
  EXPECT_EQ(triangle_free_regular_factor(4), Rational(143, 271));
  for (std::int64_t d = 3; d <= 20; ++d) {
    const std::int64_t t = d * d - 1;
    const std::int64_t b = (std::int64_t{1} << d) * d * d + t;
    EXPECT_EQ(triangle_free_regular_factor(d), Rational(b + t, 2 * b)) << d;
    EXPECT_GT(triangle_free_regular_factor(d), Rational(1, 2));
  }
  EXPECT_THROW(triangle_free_regular_factor(2), std::invalid_argument);
  EXPECT_EQ(bound_basic(7), Rational(7, 2));
  EXPECT_EQ(bound_cubic(10), Rational(6));
  EXPECT_EQ(bound_triangle_free_cubic(8), Rational(5));
  EXPECT_EQ(bound_triangle_free_subcubic_conjecture(26), Rational(16));
  EXPECT_THROW(bound_bipartite(4, 1), std::invalid_argument);
  for (std::size_t d = 0; d < 50; ++d) EXPECT_EQ(bound_bipartite(d, 3), Rational(5 * d, 8) - Rational(1, 4));
  EXPECT_EQ(bound_bipartite(6, 2), Rational(3, 4) * 6 - Rational(1, 2));
}

TEST(Bounds, MaxWeightTerm) {
  for (std::size_t d = 3; d <= 16; ++d) EXPECT_EQ(max_weight_term(d), (std::uint64_t{1} << d) * d) << d;
  EXPECT_EQ(max_weight_term(1), 2u);
  EXPECT_EQ(max_weight_term(2), 8u);  // i=2: 4*2*1 = 8 = 2^2 * 2
}

TEST(Bounds, ReportApplicability) {
  auto k4 = check_all_bounds(complete_graph(4));
  EXPECT_TRUE(k4.get("basic").applicable);
  EXPECT_TRUE(k4.get("basic").tight);
  EXPECT_FALSE(k4.get("cubic").applicable);
  EXPECT_FALSE(k4.get("triangle_free_cubic").applicable);

  auto pet = check_all_bounds(named_graph("petersen").graph);
  EXPECT_TRUE(pet.get("cubic").applicable);
  EXPECT_TRUE(pet.get("triangle_free_regular").applicable);
  EXPECT_EQ(pet.get("triangle_free_regular").value, Rational(33, 10));
  EXPECT_TRUE(pet.get("triangle_free_cubic").satisfied);
  EXPECT_FALSE(pet.proven_violation());

  auto fig3 = check_all_bounds(named_graph("fig3").graph);
  EXPECT_TRUE(fig3.get("cubic").tight);
  EXPECT_FALSE(fig3.get("basic").tight);

  auto tree = check_all_bounds(named_graph("fig1_tree").graph);
  EXPECT_TRUE(tree.get("bipartite").tight);
  EXPECT_TRUE(tree.get("triangle_free_subcubic_conjecture").tight);
  EXPECT_FALSE(tree.get("triangle_free_subcubic_conjecture").proven);
  EXPECT_THROW(tree.get("nope"), std::out_of_range);
}

TEST(Bounds, SyntheticViolationIsFlagged) {
  GraphClass cubic;
  cubic.connected = cubic.cubic = cubic.regular = cubic.subcubic = true;
  cubic.max_degree = cubic.min_degree = 3;
  auto r = bound_report(cubic, 18, 5, 10);
  EXPECT_FALSE(r.get("cubic").satisfied);
  EXPECT_TRUE(r.proven_violation());
  GraphClass tf = cubic;
  tf.cubic = tf.regular = false;
  tf.min_degree = 1;
  tf.triangle_free = true;
  auto c = bound_report(tf, 10, 4, 8);
  EXPECT_TRUE(c.conjecture_violation());
  EXPECT_FALSE(c.proven_violation());
}
