#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dissalpha/graph.hpp"
#include "dissalpha/solvers.hpp"

namespace dissalpha {

using Rational = boost::multiprecision::cpp_rational;

/// Always "num/den", also for integers ("3/1").
std::string to_string(const Rational& r);

/// diss / 2; holds for every graph.
Rational bound_basic(std::size_t diss);
/// 3 diss / 5; connected cubic graphs of order >= 6.
Rational bound_cubic(std::size_t diss);
/// (1/2)(1 + 1/(2(D-1))) diss - 1/(2(D-1)); connected bipartite graphs of
/// maximum degree at most D. Throws std::invalid_argument for D < 2.
Rational bound_bipartite(std::size_t diss, std::size_t max_degree);
/// (1/2)(1 + (D-1)(D+1) / (2^D D^2 + (D-1)(D+1))); triangle-free D-regular,
/// D >= 3. Throws std::invalid_argument for D < 3 or D > 60.
Rational triangle_free_regular_factor(std::size_t degree);
/// 5 diss / 8; triangle-free cubic graphs.
Rational bound_triangle_free_cubic(std::size_t diss);
/// 5 diss / 8 - 1/4; conjectured for connected triangle-free subcubic graphs.
Rational bound_triangle_free_subcubic_conjecture(std::size_t diss);

struct BoundRecord {
  std::string name;
  bool applicable = false;
  bool proven = true;  ///< false for the conjectured bound
  Rational value;
  bool satisfied = true;  ///< alpha >= value, exact
  bool tight = false;     ///< alpha == value, exact
};

struct BoundReport {
  std::size_t alpha = 0;
  std::size_t diss = 0;
  GraphClass cls;
  std::vector<BoundRecord> bounds;  ///< fixed order, inapplicable ones included

  const BoundRecord& get(const std::string& name) const;
  /// An applicable proven bound fails.
  bool proven_violation() const;
  /// The applicable conjectured bound fails.
  bool conjecture_violation() const;
};

/// Bound names: basic, cubic, bipartite, triangle_free_regular,
/// triangle_free_cubic, triangle_free_subcubic_conjecture.
BoundReport bound_report(const GraphClass& cls, std::size_t order, std::size_t alpha, std::size_t diss);

/// Solves alpha and diss exactly, then bound_report.
BoundReport check_all_bounds(const Graph& g, const SolveOptions& opts = {});

/// max over 1 <= i <= D of 2^i i (D-i+1). Equals 2^D D for D >= 3.
std::uint64_t max_weight_term(std::size_t degree);

}  // namespace dissalpha
