#pragma once

#include <cstddef>
#include <vector>

#include "dissalpha/graph.hpp"
#include "dissalpha/rng.hpp"

namespace dissalpha {

/// A graph with a distinguished dissociation set.
struct MarkedGraph {
  Graph graph;
  VertexSet marked;
};

Graph cycle_graph(std::size_t n);     ///< n >= 3; edges i, (i+1) mod n
Graph complete_graph(std::size_t n);  ///< n >= 1
Graph path_graph(std::size_t n);      ///< n >= 1
Graph complete_bipartite(std::size_t a, std::size_t b);

/// l cliques K_2k in a ring. Clique i occupies vertices 2k*i .. 2k*i+2k-1;
/// the first k form L(i), the last k form R(i). The j-th vertex of R(i) is
/// matched to the j-th vertex of L(i+1 mod l). Requires k, l >= 2.
Graph clique_ring(std::size_t k, std::size_t l);

/// clique_ring plus a second matching pairing the j-th vertex of R(i) with
/// the (j+1 mod k)-th vertex of L(i+1 mod l). Requires k, l >= 2.
Graph clique_ring_plus(std::size_t k, std::size_t l);

/// K_4 with the edge ab subdivided twice. Local ids: a=0 b=1 c=2 d=3 s1=4
/// s2=5; edges a-c a-d b-c b-d c-d a-s1 s1-s2 s2-b. Marked {c, d, s1, s2}.
MarkedGraph k4_star();

namespace k4s {
inline constexpr Vertex a = 0, b = 1, c = 2, d = 3, s1 = 4, s2 = 5;
}

// ---- block family -----------------------------------------------------------

enum class BlockKind { K2, K3, K4Star };

/// Vertices per block and the marked local ids: K2 {0,1} both marked; K3
/// {0,1,2} with 0,1 marked; K4Star per k4_star().
std::size_t block_order(BlockKind kind);
bool block_local_marked(BlockKind kind, Vertex local);
const char* block_kind_name(BlockKind kind);

struct BlockEdge {
  std::size_t block_a;
  Vertex local_a;
  std::size_t block_b;
  Vertex local_b;
};

struct BlockGraphSpec {
  std::vector<BlockKind> blocks;
  std::vector<BlockEdge> extra_edges;
};

/// Blocks are laid out consecutively in spec order. Throws
/// std::invalid_argument on an extra edge inside one block, with two marked
/// ends, repeating an edge, or making a vertex exceed degree 3, and on a
/// disconnected result.
MarkedGraph build_block_graph(const BlockGraphSpec& spec);

/// Uniform block multiset of size 1..max_blocks, then random legal extra
/// edges until connected (restarting on dead ends), then a few more.
BlockGraphSpec random_block_spec(std::size_t max_blocks, SplitMix64& rng);

// ---- random graphs ------------------------------------------------------------

/// G(n, 1/2)-style graph with edge probability num/den.
Graph random_graph(std::size_t n, unsigned num, unsigned den, SplitMix64& rng);

/// Random subcubic graph: shuffled candidate pairs added while both ends have
/// degree < 3. Possibly disconnected.
Graph random_subcubic(std::size_t n, SplitMix64& rng);

/// Connected triangle-free subcubic graph: random spanning tree with maximum
/// degree 3, then random triangle-free additions. Requires n >= 1.
Graph random_connected_triangle_free_subcubic(std::size_t n, SplitMix64& rng);

/// Random cubic graph by the pairing model with rejection; even n >= 4.
/// With triangle_free, also rejects graphs containing a triangle (n >= 6).
Graph random_cubic(std::size_t n, SplitMix64& rng, bool triangle_free = false);

}  // namespace dissalpha
