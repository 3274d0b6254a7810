#include "dissalpha/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace dissalpha {
namespace {

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  std::optional<std::vector<Vertex>> run(std::vector<int> ca, std::vector<int> cb) {
    if (search(std::move(ca), std::move(cb))) return result_;
    return std::nullopt;
  }

 private:
  // Refines both colourings with a shared signature table until stable.
  // Returns false as soon as the class histograms differ.
  bool refine(std::vector<int>& ca, std::vector<int>& cb) const {
    std::size_t classes = 0;
    for (;;) {
      std::map<std::pair<int, std::vector<int>>, int> table;
      auto signatures = [&](const Graph& g, const std::vector<int>& c) {
        std::vector<std::pair<int, std::vector<int>>> sig(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
          sig[v].first = c[v];
          for (Vertex w : g.neighbors(v)) sig[v].second.push_back(c[w]);
          std::sort(sig[v].second.begin(), sig[v].second.end());
          table.emplace(sig[v], 0);
        }
        return sig;
      };
      auto sa = signatures(a_, ca);
      auto sb = signatures(b_, cb);
      int next = 0;
      for (auto& [key, id] : table) id = next++;
      std::map<int, int> hist;
      for (Vertex v = 0; v < a_.order(); ++v) ++hist[ca[v] = table[sa[v]]];
      for (Vertex v = 0; v < b_.order(); ++v) --hist[cb[v] = table[sb[v]]];
      for (auto [id, diff] : hist)
        if (diff != 0) return false;
      if (table.size() == classes) return true;
      classes = table.size();
    }
  }

  bool search(std::vector<int> ca, std::vector<int> cb) {
    if (!refine(ca, cb)) return false;
    std::map<int, std::vector<Vertex>> cells_a, cells_b;
    for (Vertex v = 0; v < a_.order(); ++v) cells_a[ca[v]].push_back(v);
    for (Vertex v = 0; v < b_.order(); ++v) cells_b[cb[v]].push_back(v);

    int target = -1;
    std::size_t best = 0;
    for (const auto& [id, cell] : cells_a)
      if (cell.size() > 1 && (target == -1 || cell.size() < best)) {
        target = id;
        best = cell.size();
      }
    if (target == -1) {
      std::vector<Vertex> map(a_.order());
      for (const auto& [id, cell] : cells_a) map[cell.front()] = cells_b[id].front();
      for (auto [u, v] : a_.edges())
        if (!b_.adjacent(map[u], map[v])) return false;
      result_ = std::move(map);
      return true;
    }
    const int fresh = static_cast<int>(a_.order() + b_.order()) + 1;
    const Vertex v = cells_a[target].front();
    for (Vertex w : cells_b[target]) {
      auto na = ca;
      auto nb = cb;
      na[v] = fresh;
      nb[w] = fresh;
      if (search(std::move(na), std::move(nb))) return true;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> result_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const std::vector<int>& colors_a,
                                                    const std::vector<int>& colors_b) {
  if (a.order() > kIsomorphismMaxOrder || b.order() > kIsomorphismMaxOrder)
    throw std::invalid_argument("find_isomorphism: order exceeds " + std::to_string(kIsomorphismMaxOrder));
  if ((!colors_a.empty() && colors_a.size() != a.order()) || (!colors_b.empty() && colors_b.size() != b.order()) ||
      colors_a.empty() != colors_b.empty())
    throw std::invalid_argument("find_isomorphism: colour vector length mismatch");
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  std::vector<int> ca = colors_a.empty() ? std::vector<int>(a.order(), 0) : colors_a;
  std::vector<int> cb = colors_b.empty() ? std::vector<int>(b.order(), 0) : colors_b;
  return Matcher(a, b).run(std::move(ca), std::move(cb));
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

bool is_isomorphic_marked(const Graph& a, const VertexSet& sa, const Graph& b, const VertexSet& sb) {
  std::vector<int> ca(a.order()), cb(b.order());
  for (Vertex v = 0; v < a.order(); ++v) ca[v] = sa.contains(v) ? 1 : 0;
  for (Vertex v = 0; v < b.order(); ++v) cb[v] = sb.contains(v) ? 1 : 0;
  return find_isomorphism(a, b, ca, cb).has_value();
}

}  // namespace dissalpha
