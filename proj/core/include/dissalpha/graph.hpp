#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dissalpha {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of a fixed vertex range 0..universe-1 with bitset semantics.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet from_list(std::size_t universe, std::span<const Vertex> members);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept;
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  /// Low 64 members as a word. Only valid when universe() <= 64.
  std::uint64_t mask() const;

  VertexSet complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order of the ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  void check(Vertex v) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built: neighbor lists are sorted, duplicate-free and
/// symmetric, and no vertex is its own neighbor.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws std::invalid_argument on loops, out-of-range endpoints and
  /// repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Neighborhood bitmasks; requires order() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

struct MultiEdge {
  Vertex u;
  Vertex v;
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

/// Loopless multigraph with an explicit edge list. Edge ids are list indices.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t n, std::vector<MultiEdge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const MultiEdge& edge(std::size_t id) const { return edges_.at(id); }
  std::span<const MultiEdge> edges() const noexcept { return edges_; }

  /// Ids of edges incident with v, ascending.
  std::span<const std::size_t> incident(Vertex v) const { return incident_.at(v); }
  std::size_t degree(Vertex v) const { return incident_.at(v).size(); }

  /// The endpoint of edge `id` that is not v.
  Vertex other_end(std::size_t id, Vertex v) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Degree of each vertex, counting parallel edges with multiplicity.
std::vector<std::size_t> multigraph_degrees(const Multigraph& h);

struct GraphClass {
  bool connected = false;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  bool regular = false;
  bool cubic = false;
  bool subcubic = false;
  bool triangle_free = false;
  bool bipartite = false;
  bool tree = false;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

GraphClass classify(const Graph& g);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);

/// Subgraph induced by s, relabelled 0..|s|-1 in ascending order of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Largest degree inside G[s].
std::size_t induced_max_degree(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_dissociation_set(const Graph& g, const VertexSet& s);

/// Component counts of G[s] when G[s] has maximum degree at most 1.
struct DissProfile {
  std::size_t isolated = 0;  ///< order-1 components
  std::size_t pairs = 0;     ///< order-2 components
};

/// Throws std::invalid_argument if s is not a dissociation set.
DissProfile diss_profile(const Graph& g, const VertexSet& s);

Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::string to_string(const Graph& g);

}  // namespace dissalpha
