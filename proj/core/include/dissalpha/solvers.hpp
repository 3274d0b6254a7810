#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "dissalpha/graph.hpp"

namespace dissalpha {

/// Largest order handled by the branch-and-bound solvers (one machine word
/// per vertex set).
inline constexpr std::size_t kSolverMaxOrder = 64;

/// Largest order handled by the exhaustive subset oracles.
inline constexpr std::size_t kOracleMaxOrder = 24;

struct SolveOptions {
  /// Abort with SolveTimeout once this instant has passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class SolveTimeout : public std::runtime_error {
 public:
  SolveTimeout() : std::runtime_error("solve exceeded its time budget") {}
};

struct SolveResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

/// alpha(g) with a maximum independent set. Deterministic.
SolveResult max_independent_set(const Graph& g, const SolveOptions& opts = {});

/// diss(g) with a maximum dissociation set. Deterministic.
SolveResult max_dissociation_set(const Graph& g, const SolveOptions& opts = {});

/// Maximum dissociation set D that, among all maximum dissociation sets,
/// maximizes the number p of isolated vertices of G[D]; remaining ties go to
/// the lexicographically smallest D. r and s describe G[V \ D] and are only
/// meaningful when complement_is_dissociation holds (always the case for
/// subcubic graphs).
struct DissCertificate {
  VertexSet D;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  bool complement_is_dissociation = false;
  std::uint64_t nodes_explored = 0;
};

/// Throws std::logic_error if g is subcubic and V \ D is not a dissociation
/// set (the certificate would then contradict the exchange argument).
DissCertificate max_diss_max_isolated(const Graph& g, const SolveOptions& opts = {});

/// Exhaustive subset enumeration; independent of the search code above.
/// Throw std::invalid_argument when g.order() > kOracleMaxOrder.
std::size_t oracle_mis(const Graph& g);
std::size_t oracle_diss(const Graph& g);

/// Cut between D and V \ D of a cubic graph, counted three ways.
struct EdgeCountIdentity {
  std::size_t cut_edges = 0;
  std::size_t from_d = 0;           ///< 3p + 4q
  std::size_t from_complement = 0;  ///< 3r + 4s
};

/// Throws std::invalid_argument unless g is cubic and the certificate's
/// complement is a dissociation set; throws std::logic_error when the three
/// counts disagree.
EdgeCountIdentity edge_count_identity(const Graph& g, const DissCertificate& c);

}  // namespace dissalpha
