#pragma once

#include <cstdint>
#include <vector>

#include "dissalpha/bounds.hpp"
#include "dissalpha/graph.hpp"
#include "dissalpha/rng.hpp"

namespace dissalpha {

/// Split of V around a dissociation set D: D0 / D1 are the vertices of degree
/// 0 / 1 in G[D]; r[i] counts vertices outside D with exactly i neighbours in
/// D1 (i = 0..max_degree).
struct PartitionStats {
  std::size_t max_degree = 0;
  bool regular = false;
  std::size_t p = 0;
  std::size_t q = 0;
  VertexSet D0;
  VertexSet D1;
  std::vector<std::size_t> r;
};

/// Throws std::invalid_argument if D is not a dissociation set, and
/// std::logic_error if g is regular and sum i r_i != 2(max_degree-1) q.
PartitionStats diss_partition_stats(const Graph& g, const VertexSet& D);

/// (p + r_0)/(D+1) + sum_{i>=1} r_i / (2^i (D-i+1)) with D = st.max_degree.
/// Throws std::invalid_argument when st.max_degree is 0.
Rational expected_I2_exact(const PartitionStats& st);

/// Probability that u lands in I_2 on a triangle-free graph, using u's own
/// degree: 1/(deg+1) on D0, 1/(2^i (deg-i+1)) outside D with i neighbours in
/// D1, 0 on D1.
Rational inclusion_probability(const Graph& g, const VertexSet& D, Vertex u);

/// Sum of inclusion_probability over V; equals expected_I2_exact for regular
/// graphs.
Rational expected_I2_per_vertex(const Graph& g, const VertexSet& D);

struct ProcedureDraw {
  VertexSet I1;
  VertexSet I2;
};

/// One run of the procedure: I1 takes one end of every pair of G[D1], each
/// with probability 1/2; I2 takes u outside D1 when u precedes, in a uniform
/// random order of V \ D1, all of its neighbours outside D1 and (for u outside
/// D) has no neighbour in I1. The order is realised as i.i.d. 64-bit
/// priorities with index tie-break. Throws std::logic_error if I1 u I2 is not
/// independent.
ProcedureDraw sample_procedure(const Graph& g, const VertexSet& D, SplitMix64& rng);

/// I1 u I2 for the substream of `seed`.
VertexSet sample_independent_set(const Graph& g, const VertexSet& D, std::uint64_t seed);

/// Totals over trials; trial t uses SplitMix64::split(seed, t). All fields
/// are integers or exact rationals, so results do not depend on threading.
struct MCResult {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t sum = 0;          ///< sum of |I2|
  std::uint64_t sum_squares = 0;  ///< sum of |I2|^2
  std::vector<std::uint64_t> hits;  ///< per vertex: number of draws with v in I2
  Rational exact_expectation;       ///< expected_I2_per_vertex

  Rational mean() const;
  /// Sample variance / trials (0 for a single trial).
  Rational stderr_squared() const;
  /// |mean - exact| <= z * stderr, compared squared.
  bool mean_within(std::uint64_t z) const;
  /// |hits[v]/trials - p| <= z sqrt(p(1-p)/trials), compared squared.
  bool frequency_within(Vertex v, const Rational& p, std::uint64_t z) const;
};

/// Throws std::invalid_argument when trials == 0. workers == 0 means
/// worker_count().
MCResult montecarlo_I2(const Graph& g, const VertexSet& D, std::uint64_t trials, std::uint64_t seed,
                       std::size_t workers = 0);

}  // namespace dissalpha
