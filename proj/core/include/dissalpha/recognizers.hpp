#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dissalpha/gadgets.hpp"
#include "dissalpha/generators.hpp"
#include "dissalpha/graph.hpp"
#include "dissalpha/solvers.hpp"

namespace dissalpha {

/// 2 alpha(g) == diss(g), by the exact solvers.
bool is_basic_extremal(const Graph& g, const SolveOptions& opts = {});

/// A block of the decomposition. `vertices` follows the block's local layout
/// (K2: both ends; K3: the two marked ends then the unmarked vertex; K4Star:
/// a, b, c, d, s1, s2).
struct Block {
  BlockKind kind;
  std::vector<Vertex> vertices;
};

struct BlockDecomposition {
  bool complete_graph_k4 = false;  ///< g is K_4, which the family admits as is
  std::vector<Block> blocks;
  std::vector<Edge> extra_edges;
  VertexSet marked;
};

/// Decomposes a connected subcubic graph into marked K2 / K3 / K4* blocks plus
/// extra edges touching at most one marked vertex, starting from one maximum
/// dissociation set. Returns nullopt exactly when no such decomposition
/// exists. Throws std::invalid_argument when g is not connected and subcubic.
std::optional<BlockDecomposition> decompose_block_graph(const Graph& g, const SolveOptions& opts = {});

/// Re-checks a decomposition against g: blocks partition V, each block
/// induces exactly its kind, extra edges are the remaining edges and touch at
/// most one marked vertex. Returns an empty string on success, else the
/// first problem.
std::string check_decomposition(const Graph& g, const BlockDecomposition& d);

/// Expansion of w is isomorphic to g. Throws std::invalid_argument when w is
/// invalid.
bool verify_Gk_witness(const Graph& g, const HWitness& w);

/// Certificate of a connected cubic graph with 5 alpha = 3 diss. When the
/// expected shape (order 18k, p=0, q=5k, r=4k, s=2k, alpha=6k=r+s) fails,
/// `violation` describes it; the caller decides how to report.
struct CubicExtremalProfile {
  std::size_t n = 0, k = 0, alpha = 0, diss = 0;
  std::size_t p = 0, q = 0, r = 0, s = 0;
  std::string violation;
};

/// nullopt when 5 alpha != 3 diss. Throws std::invalid_argument unless g is
/// connected, cubic and of order at least 6.
std::optional<CubicExtremalProfile> cubic_extremal_profile(const Graph& g, const SolveOptions& opts = {});

}  // namespace dissalpha
