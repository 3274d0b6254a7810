#include "dissalpha/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace dissalpha {
namespace {

constexpr std::size_t kCodeMaxOrder = 8;

// Label-invariant colours: ids follow the sorted order of signatures. A
// signature packs the own colour above 3-bit per-colour neighbour counts.
std::vector<int> refine(const std::vector<std::uint32_t>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> color(n, 0);
  std::vector<std::uint64_t> sig(n), sorted;
  std::size_t classes = 1;
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t s = std::uint64_t(color[v]) << 32;
      for (std::uint32_t w = adj[v]; w != 0; w &= w - 1) s += std::uint64_t{1} << (3 * color[std::countr_zero(w)]);
      sig[v] = s;
    }
    sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes) return color;
    classes = sorted.size();
  }
}

class CodeSearch {
 public:
  CodeSearch(const std::vector<std::uint32_t>& adj, const std::vector<int>& color)
      : adj_(adj), color_(color), order_(adj.size()) {
    for (std::size_t v = 0; v < adj.size(); ++v) slot_color_.push_back(color[v]);
    std::sort(slot_color_.begin(), slot_color_.end());
  }

  std::uint64_t run() {
    place(0, 0, 0);
    return best_;
  }

 private:
  // code bit for slots (i, j), i < j: j(j-1)/2 + i, counted from the top so
  // that earlier slots dominate
  void place(std::size_t pos, std::uint32_t used, std::uint64_t code) {
    const std::size_t n = adj_.size();
    if (have_ && code > best_prefix_bound(pos, code)) return;
    if (pos == n) {
      if (!have_ || code < best_) {
        best_ = code;
        have_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((used >> v) & 1U || color_[v] != slot_color_[pos]) continue;
      std::uint64_t next = code;
      for (std::size_t i = 0; i < pos; ++i)
        if ((adj_[v] >> order_[i]) & 1U) next |= bit(i, pos);
      order_[pos] = static_cast<Vertex>(v);
      place(pos + 1, used | (std::uint32_t{1} << v), next);
    }
  }

  std::uint64_t bit(std::size_t i, std::size_t j) const {
    const std::size_t total = adj_.size() * (adj_.size() - 1) / 2;
    return std::uint64_t{1} << (total - 1 - (j * (j - 1) / 2 + i));
  }

  // Bits for slots < pos are final; the best code restricted to them bounds
  // any completion from below.
  std::uint64_t best_prefix_bound(std::size_t pos, std::uint64_t) const {
    const std::size_t n = adj_.size();
    const std::size_t total = n * (n - 1) / 2;
    const std::size_t fixed = pos == 0 ? 0 : pos * (pos - 1) / 2;
    if (fixed == 0) return ~std::uint64_t{0};
    const std::uint64_t mask = ((std::uint64_t{1} << fixed) - 1) << (total - fixed);
    return (best_ & mask) | ~mask;
  }

  const std::vector<std::uint32_t>& adj_;
  const std::vector<int>& color_;
  std::vector<int> slot_color_;
  std::vector<Vertex> order_;
  std::uint64_t best_ = 0;
  bool have_ = false;
};

std::uint64_t code_of(const std::vector<std::uint32_t>& adj) {
  if (adj.size() < 2) return 0;
  auto color = refine(adj);
  return CodeSearch(adj, color).run();
}

Graph graph_of_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  const std::size_t total = n * (n - 1) / 2;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((code >> (total - 1 - (j * (j - 1) / 2 + i))) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

bool connected(const std::vector<std::uint32_t>& adj) {
  if (adj.empty()) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t w = frontier; w != 0; w &= w - 1) next |= adj[std::countr_zero(w)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << adj.size()) - 1;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kCodeMaxOrder) throw std::invalid_argument("canonical_code: order exceeds 8");
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  return code_of(adj);
}

std::vector<Graph> enumerate_graphs(std::size_t n, const EnumerateFilter& filter) {
  if (n > kEnumerateMaxOrder)
    throw std::invalid_argument("enumerate_graphs: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kEnumerateMaxOrder));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::vector<std::uint64_t> codes;
  std::vector<std::uint32_t> adj(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::uint32_t w = mask; w != 0; w &= w - 1) {
      auto [i, j] = pairs[std::countr_zero(w)];
      adj[i] |= std::uint32_t{1} << j;
      adj[j] |= std::uint32_t{1} << i;
    }
    if (filter.subcubic && std::any_of(adj.begin(), adj.end(), [](std::uint32_t a) { return std::popcount(a) > 3; }))
      continue;
    if (filter.connected && !connected(adj)) continue;
    if (filter.triangle_free || filter.bipartite) {
      bool triangle = false;
      for (auto [i, j] : pairs)
        if (((adj[i] >> j) & 1U) && (adj[i] & adj[j])) triangle = true;
      if (triangle) continue;
    }
    if (filter.bipartite) {
      std::vector<Edge> edges;
      for (auto [i, j] : pairs)
        if ((adj[i] >> j) & 1U) edges.emplace_back(i, j);
      if (!is_bipartite(Graph::from_edges(n, edges))) continue;
    }
    codes.push_back(code_of(adj));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(graph_of_code(n, c));
  return out;
}

}  // namespace dissalpha
