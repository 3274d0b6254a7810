#include "dissalpha/recognizers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dissalpha/isomorphism.hpp"

namespace dissalpha {

bool is_basic_extremal(const Graph& g, const SolveOptions& opts) {
  return 2 * max_independent_set(g, opts).value == max_dissociation_set(g, opts).value;
}

std::optional<BlockDecomposition> decompose_block_graph(const Graph& g, const SolveOptions& opts) {
  auto cls = classify(g);
  if (!cls.connected || !cls.subcubic)
    throw std::invalid_argument("decompose_block_graph: graph must be connected and subcubic");
  const std::size_t n = g.order();
  if (n == 4 && g.size() == 6) {
    BlockDecomposition d;
    d.complete_graph_k4 = true;
    d.marked = VertexSet::from_list(4, std::vector<Vertex>{0, 1});
    return d;
  }

  const VertexSet D = max_dissociation_set(g, opts).witness;
  // G[D] must be a perfect matching; partner[x] is x's mate
  std::vector<Vertex> partner(n, 0);
  std::vector<int> pair_id(n, -1);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x : D.members()) {
    std::vector<Vertex> inside;
    for (Vertex y : g.neighbors(x))
      if (D.contains(y)) inside.push_back(y);
    if (inside.size() != 1) return std::nullopt;
    partner[x] = inside.front();
    if (x < partner[x]) {
      pair_id[x] = pair_id[partner[x]] = static_cast<int>(pairs.size());
      pairs.emplace_back(x, partner[x]);
    }
  }

  // K(u): the pair whose both ends u sees
  std::vector<std::vector<Vertex>> owners(pairs.size());
  std::vector<int> home(n, -1);
  for (Vertex u = 0; u < n; ++u) {
    if (D.contains(u)) continue;
    for (Vertex x : g.neighbors(u))
      if (D.contains(x) && g.adjacent(u, partner[x])) home[u] = pair_id[x];
    if (home[u] < 0) return std::nullopt;
    owners[static_cast<std::size_t>(home[u])].push_back(u);
  }

  BlockDecomposition d;
  d.marked = D;
  std::vector<char> used(pairs.size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [c, dd] = pairs[i];
    if (owners[i].size() > 2) return std::nullopt;
    if (owners[i].size() == 2) {
      const Vertex u = owners[i][0], v = owners[i][1];
      if (g.adjacent(u, v)) return std::nullopt;
      // third neighbours of u and v must be the two ends of one pair
      auto third = [&](Vertex w) -> std::optional<Vertex> {
        for (Vertex x : g.neighbors(w))
          if (x != c && x != dd) return x;
        return std::nullopt;
      };
      auto su = third(u), sv = third(v);
      if (!su || !sv || !D.contains(*su) || partner[*su] != *sv) return std::nullopt;
      const auto j = static_cast<std::size_t>(pair_id[*su]);
      if (j == i || used[j] || !owners[j].empty()) return std::nullopt;
      used[i] = used[j] = 1;
      d.blocks.push_back({BlockKind::K4Star, {u, v, c, dd, *su, *sv}});
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (used[i]) continue;
    const auto [x, y] = pairs[i];
    if (owners[i].size() == 1) {
      d.blocks.push_back({BlockKind::K3, {x, y, owners[i][0]}});
    } else if (owners[i].empty()) {
      d.blocks.push_back({BlockKind::K2, {x, y}});
    } else {
      return std::nullopt;
    }
    used[i] = 1;
  }
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const Block& a, const Block& b) { return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                                                        *std::min_element(b.vertices.begin(), b.vertices.end()); });

  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    for (Vertex v : d.blocks[b].vertices) block_of[v] = static_cast<int>(b);
  for (auto [u, v] : g.edges())
    if (block_of[u] != block_of[v]) d.extra_edges.emplace_back(u, v);

  if (!check_decomposition(g, d).empty()) return std::nullopt;
  return d;
}

std::string check_decomposition(const Graph& g, const BlockDecomposition& d) {
  const std::size_t n = g.order();
  if (d.complete_graph_k4) {
    if (n != 4 || g.size() != 6) return "K4 sentinel on a graph that is not K4";
    return {};
  }
  if (d.marked.universe() != n) return "marked set universe mismatch";
  std::vector<int> block_of(n, -1);
  std::size_t block_edges = 0;
  VertexSet expected_marked(n);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& blk = d.blocks[b];
    if (blk.vertices.size() != block_order(blk.kind)) return "block " + std::to_string(b) + " has the wrong order";
    for (std::size_t i = 0; i < blk.vertices.size(); ++i) {
      Vertex v = blk.vertices[i];
      if (v >= n) return "block vertex out of range";
      if (block_of[v] != -1) return "vertex " + std::to_string(v) + " lies in two blocks";
      block_of[v] = static_cast<int>(b);
      if (block_local_marked(blk.kind, static_cast<Vertex>(i))) expected_marked.insert(v);
    }
    // block must induce exactly the template
    BlockGraphSpec one{{blk.kind}, {}};
    const Graph tmpl = build_block_graph(one).graph;
    for (Vertex i = 0; i < blk.vertices.size(); ++i)
      for (Vertex j = i + 1; j < blk.vertices.size(); ++j)
        if (g.adjacent(blk.vertices[i], blk.vertices[j]) != tmpl.adjacent(i, j))
          return "block " + std::to_string(b) + " does not induce a " + block_kind_name(blk.kind);
    block_edges += tmpl.size();
  }
  for (Vertex v = 0; v < n; ++v)
    if (block_of[v] == -1) return "vertex " + std::to_string(v) + " is in no block";
  if (!(expected_marked == d.marked)) return "marked set differs from the block markings";
  std::set<Edge> extra;
  for (auto [u, v] : d.extra_edges) {
    if (u > v) std::swap(u, v);
    if (u >= n || v >= n || !g.adjacent(u, v)) return "extra edge is not an edge of the graph";
    if (block_of[u] == block_of[v]) return "extra edge inside a block";
    if (d.marked.contains(u) && d.marked.contains(v)) return "extra edge joins two marked vertices";
    extra.insert({u, v});
  }
  if (extra.size() != d.extra_edges.size() || block_edges + extra.size() != g.size())
    return "extra edges do not account for the remaining edges";
  if (!is_dissociation_set(g, d.marked)) return "marked set is not a dissociation set";
  return {};
}

bool verify_Gk_witness(const Graph& g, const HWitness& w) {
  validate_witness(w);
  if (g.order() != 18 * w.k) return false;
  return is_isomorphic(expand_to_Gk(w).graph, g);
}

std::optional<CubicExtremalProfile> cubic_extremal_profile(const Graph& g, const SolveOptions& opts) {
  auto cls = classify(g);
  if (!cls.connected || !cls.cubic || g.order() < 6)
    throw std::invalid_argument("cubic_extremal_profile: graph must be connected, cubic and of order >= 6");
  const std::size_t alpha = max_independent_set(g, opts).value;
  const std::size_t diss = max_dissociation_set(g, opts).value;
  if (5 * alpha != 3 * diss) return std::nullopt;

  CubicExtremalProfile pr;
  pr.n = g.order();
  pr.alpha = alpha;
  pr.diss = diss;
  auto fail = [&](const std::string& what) {
    if (pr.violation.empty()) pr.violation = what;
  };
  if (pr.n % 18 != 0) fail("order " + std::to_string(pr.n) + " is not a multiple of 18");
  pr.k = pr.n / 18;
  auto cert = max_diss_max_isolated(g, opts);
  pr.p = cert.p;
  pr.q = cert.q;
  pr.r = cert.r;
  pr.s = cert.s;
  const std::size_t k = pr.k;
  if (pr.p != 0 || pr.q != 5 * k || pr.r != 4 * k || pr.s != 2 * k)
    fail("certificate (p,q,r,s) = (" + std::to_string(pr.p) + "," + std::to_string(pr.q) + "," +
         std::to_string(pr.r) + "," + std::to_string(pr.s) + ") differs from (0,5k,4k,2k)");
  if (3 * alpha != pr.n) fail("alpha is not n/3");
  if (alpha != pr.r + pr.s) fail("alpha differs from r + s");
  return pr;
}

}  // namespace dissalpha
