#include "dissalpha/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dissalpha {

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::from_list(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
  if (universe < 64 && (mask >> universe) != 0)
    throw std::invalid_argument("VertexSet::from_mask: mask has bits outside the universe");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v >= universe_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside range 0.." +
                            std::to_string(universe_));
}

bool VertexSet::contains(Vertex v) const noexcept {
  return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw std::logic_error("VertexSet::mask: universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe_);
  for (Vertex v = 0; v < universe_; ++v)
    if (!contains(v)) c.insert(v);
  return c;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") outside vertex range of order " + std::to_string(n));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("repeated edge at vertex " + std::to_string(v));
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& nb : adj_) d = std::max(d, nb.size());
  return d;
}

std::size_t Graph::min_degree() const noexcept {
  if (adj_.empty()) return 0;
  std::size_t d = adj_.front().size();
  for (const auto& nb : adj_) d = std::min(d, nb.size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (order() > 64) throw std::invalid_argument("adjacency_masks: graph order exceeds 64");
  std::vector<std::uint64_t> masks(order(), 0);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u]) masks[u] |= std::uint64_t{1} << v;
  return masks;
}

// ---- Multigraph ------------------------------------------------------------

Multigraph::Multigraph(std::size_t n, std::vector<MultiEdge> edges)
    : n_(n), edges_(std::move(edges)), incident_(n) {
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("multigraph edge " + std::to_string(id) + " outside vertex range");
    if (e.u == e.v) throw std::invalid_argument("multigraph edge " + std::to_string(id) + " is a loop");
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
}

Vertex Multigraph::other_end(std::size_t id, Vertex v) const {
  const auto& e = edges_.at(id);
  if (e.u == v) return e.v;
  if (e.v == v) return e.u;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not an end of edge " +
                              std::to_string(id));
}

std::vector<std::size_t> multigraph_degrees(const Multigraph& h) {
  std::vector<std::size_t> deg(h.order(), 0);
  for (const auto& e : h.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

// ---- predicates ------------------------------------------------------------

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      // common neighbour scan over the two sorted lists
      auto a = g.neighbors(u);
      auto b = g.neighbors(v);
      auto ia = a.begin();
      auto ib = b.begin();
      while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return false;
        if (*ia < *ib) ++ia; else ++ib;
      }
    }
  return true;
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  c.connected = is_connected(g);
  c.max_degree = g.max_degree();
  c.min_degree = g.min_degree();
  c.regular = g.order() > 0 && c.max_degree == c.min_degree;
  c.cubic = c.regular && c.max_degree == 3;
  c.subcubic = c.max_degree <= 3;
  c.triangle_free = is_triangle_free(g);
  c.bipartite = is_bipartite(g);
  c.tree = c.connected && g.size() + 1 == g.order();
  return c;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() > g.order())
    throw std::invalid_argument("induced_subgraph: vertex set exceeds the graph's vertex range");
  const auto members = s.members();
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : members)
    for (Vertex v : g.neighbors(u))
      if (u < v && s.contains(v)) edges.emplace_back(index[u], index[v]);
  return Graph::from_edges(members.size(), edges);
}

std::size_t induced_max_degree(const Graph& g, const VertexSet& s) {
  std::size_t best = 0;
  for (Vertex u : s.members()) {
    std::size_t d = 0;
    for (Vertex v : g.neighbors(u))
      if (s.contains(v)) ++d;
    best = std::max(best, d);
  }
  return best;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  return s.universe() <= g.order() && induced_max_degree(g, s) == 0;
}

bool is_dissociation_set(const Graph& g, const VertexSet& s) {
  return s.universe() <= g.order() && induced_max_degree(g, s) <= 1;
}

DissProfile diss_profile(const Graph& g, const VertexSet& s) {
  if (!is_dissociation_set(g, s))
    throw std::invalid_argument("diss_profile: set is not a dissociation set");
  DissProfile p;
  std::size_t in_pairs = 0;
  for (Vertex u : s.members()) {
    bool partnered = false;
    for (Vertex v : g.neighbors(u))
      if (s.contains(v)) partnered = true;
    if (partnered) ++in_pairs; else ++p.isolated;
  }
  p.pairs = in_pairs / 2;
  return p;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", edges={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  os << "})";
  return os.str();
}

}  // namespace dissalpha
