#include "dissalpha/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace dissalpha {
namespace {

std::size_t uniform(SplitMix64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Graph ring(std::size_t k, std::size_t l, bool second_matching) {
  require(k >= 2 && l >= 2, "clique ring requires k >= 2 and l >= 2");
  const std::size_t w = 2 * k;
  std::vector<Edge> edges;
  auto id = [&](std::size_t clique, std::size_t j) { return static_cast<Vertex>(clique * w + j); };
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t x = 0; x < w; ++x)
      for (std::size_t y = x + 1; y < w; ++y) edges.emplace_back(id(i, x), id(i, y));
    const std::size_t next = (i + 1) % l;
    for (std::size_t j = 0; j < k; ++j) {
      edges.emplace_back(id(i, k + j), id(next, j));
      if (second_matching) edges.emplace_back(id(i, k + j), id(next, (j + 1) % k));
    }
  }
  return Graph::from_edges(l * w, edges);
}

}  // namespace

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle_graph requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete_graph requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path_graph requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph::from_edges(a + b, edges);
}

Graph clique_ring(std::size_t k, std::size_t l) { return ring(k, l, false); }

Graph clique_ring_plus(std::size_t k, std::size_t l) { return ring(k, l, true); }

MarkedGraph k4_star() {
  using namespace k4s;
  const std::vector<Edge> edges{{a, c}, {a, d}, {b, c}, {b, d}, {c, d}, {a, s1}, {s1, s2}, {s2, b}};
  const std::vector<Vertex> marked{c, d, s1, s2};
  return {Graph::from_edges(6, edges), VertexSet::from_list(6, marked)};
}

// ---- block family -----------------------------------------------------------

std::size_t block_order(BlockKind kind) {
  switch (kind) {
    case BlockKind::K2: return 2;
    case BlockKind::K3: return 3;
    case BlockKind::K4Star: return 6;
  }
  return 0;
}

bool block_local_marked(BlockKind kind, Vertex local) {
  switch (kind) {
    case BlockKind::K2: return local < 2;
    case BlockKind::K3: return local < 2;
    case BlockKind::K4Star: return local >= k4s::c && local <= k4s::s2;
  }
  return false;
}

const char* block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::K2: return "K2";
    case BlockKind::K3: return "K3";
    case BlockKind::K4Star: return "K4STAR";
  }
  return "?";
}

namespace {

std::vector<Edge> block_edges(BlockKind kind) {
  switch (kind) {
    case BlockKind::K2: return {{0, 1}};
    case BlockKind::K3: return {{0, 1}, {0, 2}, {1, 2}};
    case BlockKind::K4Star: return k4_star().graph.edges();
  }
  return {};
}

}  // namespace

MarkedGraph build_block_graph(const BlockGraphSpec& spec) {
  std::vector<Vertex> offset;
  std::size_t n = 0;
  for (auto kind : spec.blocks) {
    offset.push_back(static_cast<Vertex>(n));
    n += block_order(kind);
  }
  std::vector<Edge> edges;
  VertexSet marked(n);
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    for (auto [u, v] : block_edges(spec.blocks[b])) edges.emplace_back(offset[b] + u, offset[b] + v);
    for (Vertex x = 0; x < block_order(spec.blocks[b]); ++x)
      if (block_local_marked(spec.blocks[b], x)) marked.insert(offset[b] + x);
  }
  std::set<Edge> seen;
  for (std::size_t i = 0; i < spec.extra_edges.size(); ++i) {
    const auto& e = spec.extra_edges[i];
    const std::string tag = "extra edge " + std::to_string(i) + ": ";
    require(e.block_a < spec.blocks.size() && e.block_b < spec.blocks.size(), tag + "block index out of range");
    require(e.block_a != e.block_b, tag + "joins two vertices of the same block");
    require(e.local_a < block_order(spec.blocks[e.block_a]) &&
                e.local_b < block_order(spec.blocks[e.block_b]),
            tag + "local vertex out of range");
    require(!(block_local_marked(spec.blocks[e.block_a], e.local_a) &&
              block_local_marked(spec.blocks[e.block_b], e.local_b)),
            tag + "both ends are marked");
    Vertex u = offset[e.block_a] + e.local_a;
    Vertex v = offset[e.block_b] + e.local_b;
    if (u > v) std::swap(u, v);
    require(seen.insert({u, v}).second, tag + "repeats an edge");
    edges.emplace_back(u, v);
  }
  Graph g = Graph::from_edges(n, edges);
  require(g.max_degree() <= 3, "block graph exceeds maximum degree 3");
  require(is_connected(g), "block graph is disconnected");
  return {std::move(g), std::move(marked)};
}

BlockGraphSpec random_block_spec(std::size_t max_blocks, SplitMix64& rng) {
  require(max_blocks >= 1, "random_block_spec requires max_blocks >= 1");
  for (;;) {
    BlockGraphSpec spec;
    const std::size_t count = 1 + uniform(rng, max_blocks);
    for (std::size_t i = 0; i < count; ++i) spec.blocks.push_back(static_cast<BlockKind>(uniform(rng, 3)));

    std::vector<std::pair<std::size_t, Vertex>> slots;  // (block, local)
    std::vector<std::vector<int>> degree;
    for (std::size_t b = 0; b < count; ++b) {
      degree.emplace_back(block_order(spec.blocks[b]), 0);
      for (auto [u, v] : block_edges(spec.blocks[b])) {
        ++degree[b][u];
        ++degree[b][v];
      }
      for (Vertex x = 0; x < block_order(spec.blocks[b]); ++x) slots.emplace_back(b, x);
    }
    // union-find over blocks
    std::vector<std::size_t> parent(count);
    for (std::size_t i = 0; i < count; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = count;
    std::set<std::pair<std::size_t, std::size_t>> used;
    auto legal = [&](const std::pair<std::size_t, Vertex>& p, const std::pair<std::size_t, Vertex>& q) {
      if (p.first == q.first) return false;
      if (degree[p.first][p.second] >= 3 || degree[q.first][q.second] >= 3) return false;
      if (block_local_marked(spec.blocks[p.first], p.second) &&
          block_local_marked(spec.blocks[q.first], q.second))
        return false;
      return true;
    };
    auto slot_id = [&](const std::pair<std::size_t, Vertex>& p) {
      std::size_t id = 0;
      for (std::size_t b = 0; b < p.first; ++b) id += block_order(spec.blocks[b]);
      return id + p.second;
    };
    auto add = [&](const std::pair<std::size_t, Vertex>& p, const std::pair<std::size_t, Vertex>& q) {
      spec.extra_edges.push_back({p.first, p.second, q.first, q.second});
      ++degree[p.first][p.second];
      ++degree[q.first][q.second];
      auto key = std::minmax(slot_id(p), slot_id(q));
      used.insert(key);
      auto ra = find(p.first), rb = find(q.first);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    };

    bool dead = false;
    while (components > 1 && !dead) {
      std::vector<std::pair<std::size_t, std::size_t>> joining;
      for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = i + 1; j < slots.size(); ++j)
          if (legal(slots[i], slots[j]) && find(slots[i].first) != find(slots[j].first))
            joining.emplace_back(i, j);
      if (joining.empty()) {
        dead = true;
        break;
      }
      auto [i, j] = joining[uniform(rng, joining.size())];
      add(slots[i], slots[j]);
    }
    if (dead) continue;

    const std::size_t extra = uniform(rng, count + 1);
    for (std::size_t t = 0; t < extra; ++t) {
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = i + 1; j < slots.size(); ++j)
          if (legal(slots[i], slots[j]) && !used.count(std::minmax(slot_id(slots[i]), slot_id(slots[j]))))
            options.emplace_back(i, j);
      if (options.empty()) break;
      auto [i, j] = options[uniform(rng, options.size())];
      add(slots[i], slots[j]);
    }
    return spec;
  }
}

// ---- random graphs ------------------------------------------------------------

Graph random_graph(std::size_t n, unsigned num, unsigned den, SplitMix64& rng) {
  require(den > 0 && num <= den, "random_graph: probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform(rng, den) < num) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_subcubic(std::size_t n, SplitMix64& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t attempts = pairs.empty() ? 0 : uniform(rng, pairs.size() + 1);
  std::vector<int> degree(n, 0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < attempts; ++i) {
    auto [u, v] = pairs[i];
    if (degree[u] < 3 && degree[v] < 3) {
      ++degree[u];
      ++degree[v];
      edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_triangle_free_subcubic(std::size_t n, SplitMix64& rng) {
  require(n >= 1, "random_connected_triangle_free_subcubic requires n >= 1");
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  auto link = [&](Vertex u, Vertex v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    edges.emplace_back(u, v);
  };
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (Vertex u = 0; u < v; ++u)
      if (adj[u].size() < 3) open.push_back(u);
    link(open[uniform(rng, open.size())], v);
  }
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t budget = uniform(rng, n + 1);
  std::size_t added = 0;
  for (auto [u, v] : pairs) {
    if (added == budget) break;
    if (adj[u].size() >= 3 || adj[v].size() >= 3) continue;
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
    bool common = false;
    for (Vertex w : adj[u])
      if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end()) common = true;
    if (common) continue;
    link(u, v);
    ++added;
  }
  return Graph::from_edges(n, edges);
}

Graph random_cubic(std::size_t n, SplitMix64& rng, bool triangle_free) {
  require(n >= 4 && n % 2 == 0, "random_cubic requires even n >= 4");
  require(!triangle_free || n >= 6, "random triangle-free cubic requires n >= 6");
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < 3; ++i) points.push_back(v);
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex u = points[i], v = points[i + 1];
      if (u > v) std::swap(u, v);
      simple = u != v && edges.insert({u, v}).second;
    }
    if (!simple) continue;
    std::vector<Edge> list(edges.begin(), edges.end());
    Graph g = Graph::from_edges(n, list);
    if (triangle_free && !is_triangle_free(g)) continue;
    return g;
  }
}

}  // namespace dissalpha
