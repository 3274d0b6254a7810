#include "dissalpha/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dissalpha/generators.hpp"
#include "dissalpha/solvers.hpp"

namespace dissalpha {
namespace {

Gadget make_triangle() {
  return {GadgetKind::Triangle, complete_graph(3), {0, 1, 2}, VertexSet(3)};
}

Gadget make_k4_star() {
  const std::vector<Vertex> d{k4s::c, k4s::d};
  return {GadgetKind::K4Star, k4_star().graph, {k4s::s1, k4s::s2}, VertexSet::from_list(6, d)};
}

// Four triangles; the attach vertex 8 sees 6 and 7.
Gadget make_leaf_a() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6},
                                {3, 6}, {4, 5}, {4, 7}, {5, 7}, {6, 8}, {7, 8}};
  const std::vector<Vertex> d{2, 3, 4, 5};
  return {GadgetKind::Leaf9A, Graph::from_edges(9, edges), {8}, VertexSet::from_list(9, d)};
}

// Two triangles; the attach neighbours 6 and 7 each see both marked pairs.
Gadget make_leaf_b() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 7},
                                {3, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 8}, {7, 8}};
  const std::vector<Vertex> d{2, 3, 4, 5};
  return {GadgetKind::Leaf9B, Graph::from_edges(9, edges), {8}, VertexSet::from_list(9, d)};
}

void check(bool ok, const Gadget& g, const std::string& what) {
  if (!ok) throw std::logic_error(std::string("gadget ") + gadget_kind_name(g.kind) + ": " + what);
}

}  // namespace

const char* gadget_kind_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Triangle: return "TRIANGLE";
    case GadgetKind::K4Star: return "K4STAR";
    case GadgetKind::Leaf9A: return "LEAF9_A";
    case GadgetKind::Leaf9B: return "LEAF9_B";
  }
  return "?";
}

void validate_gadget(const Gadget& g) {
  const Graph& G = g.graph;
  check(g.d_contribution.universe() == G.order(), g, "d_contribution universe mismatch");
  for (Vertex v : g.attach_points) check(v < G.order(), g, "attach point out of range");
  // every vertex reaches degree 3 once its external edges are attached
  std::vector<std::size_t> external(G.order(), 0);
  for (Vertex v : g.attach_points) ++external[v];
  for (Vertex v = 0; v < G.order(); ++v)
    check(G.degree(v) + external[v] == 3, g, "vertex " + std::to_string(v) + " does not become cubic");
  check(is_connected(G), g, "not connected");
  check(is_dissociation_set(G, g.d_contribution), g, "d_contribution is not a dissociation set");
  for (Vertex v : g.attach_points) check(!g.d_contribution.contains(v), g, "attach point in d_contribution");
  const std::size_t alpha = max_independent_set(G).value;

  switch (g.kind) {
    case GadgetKind::Triangle:
      check(G.order() == 3 && G.size() == 3 && g.attach_points.size() == 3, g, "shape");
      check(g.d_contribution.empty(), g, "d_contribution must be empty");
      check(alpha == 1, g, "independence number");
      break;
    case GadgetKind::K4Star:
      check(G.order() == 6 && G.size() == 8 && g.attach_points.size() == 2, g, "shape");
      check(g.d_contribution.size() == 2 && diss_profile(G, g.d_contribution).pairs == 1, g,
            "d_contribution must be one edge");
      check(alpha == 2, g, "independence number");
      break;
    case GadgetKind::Leaf9A:
    case GadgetKind::Leaf9B: {
      check(G.order() == 9 && G.size() == 13 && g.attach_points.size() == 1, g, "shape");
      std::size_t deg2 = 0;
      for (Vertex v = 0; v < 9; ++v) deg2 += G.degree(v) == 2;
      check(deg2 == 1, g, "exactly one vertex of degree 2");
      auto prof = diss_profile(G, g.d_contribution);
      check(g.d_contribution.size() == 4 && prof.pairs == 2, g, "d_contribution must be two disjoint edges");
      check(alpha == 3, g, "independence number");
      break;
    }
  }
}

const Gadget& gadget(GadgetKind kind) {
  static const std::vector<Gadget> library = [] {
    std::vector<Gadget> all{make_triangle(), make_k4_star(), make_leaf_a(), make_leaf_b()};
    for (const auto& g : all) validate_gadget(g);
    return all;
  }();
  return library.at(static_cast<std::size_t>(kind));
}

HValidation validate_H(const Multigraph& h, std::size_t k, const std::vector<std::size_t>& M) {
  HValidation r;
  auto deg = multigraph_degrees(h);
  for (auto d : deg) {
    if (d == 1) ++r.n1;
    if (d == 2) ++r.n2;
    if (d == 3) ++r.n3;
  }
  if (k == 0) r.failures.push_back("k must be positive");
  if (h.order() == 0) r.failures.push_back("H is empty");
  for (Vertex v = 0; v < h.order(); ++v) {
    if (deg[v] > 3) r.failures.push_back("vertex " + std::to_string(v) + " has degree above 3");
    if (deg[v] == 0 && h.order() > 1) r.failures.push_back("vertex " + std::to_string(v) + " is isolated");
  }
  // connectivity over the multigraph
  if (h.order() > 0) {
    std::vector<char> seen(h.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto id : h.incident(u)) {
        Vertex w = h.other_end(id, u);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != h.order()) r.failures.push_back("H is not connected");
  }
  if (3 * r.n1 + 2 * r.n2 + r.n3 != 6 * k)
    r.failures.push_back("degree equation 3n1+2n2+n3 = " + std::to_string(3 * r.n1 + 2 * r.n2 + r.n3) +
                         " differs from 6k = " + std::to_string(6 * k));
  if (M.size() != k)
    r.failures.push_back("matching has " + std::to_string(M.size()) + " edges, expected " + std::to_string(k));

  std::vector<char> covered(h.order(), 0);
  std::set<std::size_t> in_m;
  bool matching = true;
  for (auto id : M) {
    if (id >= h.edge_count()) {
      r.failures.push_back("matching edge id " + std::to_string(id) + " out of range");
      matching = false;
      continue;
    }
    if (!in_m.insert(id).second) {
      r.failures.push_back("matching edge id " + std::to_string(id) + " repeated");
      matching = false;
      continue;
    }
    const auto& e = h.edge(id);
    if (covered[e.u] || covered[e.v]) {
      r.failures.push_back("matching edges share a vertex at edge " + std::to_string(id));
      matching = false;
    }
    covered[e.u] = covered[e.v] = 1;
  }
  if (matching)
    for (std::size_t id = 0; id < h.edge_count(); ++id) {
      if (in_m.count(id)) continue;
      const auto& e = h.edge(id);
      if (covered[e.u] && covered[e.v])
        r.failures.push_back("matching is not induced: edge " + std::to_string(id) + " joins covered vertices");
    }
  for (Vertex v = 0; v < h.order(); ++v)
    if (deg[v] == 1 && !covered[v])
      r.failures.push_back("degree-1 vertex " + std::to_string(v) + " is not covered by the matching");
  return r;
}

void validate_witness(const HWitness& w) {
  auto report = validate_H(w.H, w.k, w.M);
  if (!report.ok()) throw std::invalid_argument("invalid witness: " + report.failures.front());
  std::set<std::size_t> in_m(w.M.begin(), w.M.end());
  std::vector<std::size_t> out(w.H.order(), 0);
  for (std::size_t id = 0; id < w.H.edge_count(); ++id) {
    if (in_m.count(id)) {
      if (w.heads.count(id)) throw std::invalid_argument("invalid witness: matching edge " + std::to_string(id) + " is oriented");
      continue;
    }
    auto it = w.heads.find(id);
    if (it == w.heads.end()) throw std::invalid_argument("invalid witness: edge " + std::to_string(id) + " is not oriented");
    const auto& e = w.H.edge(id);
    if (it->second != e.u && it->second != e.v)
      throw std::invalid_argument("invalid witness: head of edge " + std::to_string(id) + " is not an endpoint");
    ++out[w.H.other_end(id, it->second)];
  }
  for (auto [id, head] : w.heads)
    if (id >= w.H.edge_count()) throw std::invalid_argument("invalid witness: orientation names unknown edge " + std::to_string(id));
  std::vector<char> covered(w.H.order(), 0);
  for (auto id : w.M) covered[w.H.edge(id).u] = covered[w.H.edge(id).v] = 1;
  for (Vertex v = 0; v < w.H.order(); ++v)
    if (!covered[v] && out[v] != 2)
      throw std::invalid_argument("invalid witness: uncovered vertex " + std::to_string(v) + " has out-degree " +
                                  std::to_string(out[v]));
  for (auto [v, kind] : w.leaf_variants) {
    if (v >= w.H.order() || w.H.degree(v) != 1)
      throw std::invalid_argument("invalid witness: leaf variant given for non-leaf vertex " + std::to_string(v));
    if (kind != GadgetKind::Leaf9A && kind != GadgetKind::Leaf9B)
      throw std::invalid_argument("invalid witness: leaf variant must be LEAF9_A or LEAF9_B");
  }
}

Expansion expand_to_Gk(const HWitness& w) {
  validate_witness(w);
  const Multigraph& h = w.H;
  Expansion ex;
  std::vector<Vertex> offset(h.order());
  std::size_t n = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    GadgetKind kind = GadgetKind::Triangle;
    switch (h.degree(v)) {
      case 3: kind = GadgetKind::Triangle; break;
      case 2: kind = GadgetKind::K4Star; break;
      case 1: {
        auto it = w.leaf_variants.find(v);
        kind = it == w.leaf_variants.end() ? GadgetKind::Leaf9A : it->second;
        break;
      }
      default: throw std::invalid_argument("expand_to_Gk: vertex degree outside 1..3");
    }
    const Gadget& gd = gadget(kind);
    if (gd.attach_points.size() != h.degree(v))
      throw std::invalid_argument("expand_to_Gk: attach-point arity mismatch at vertex " + std::to_string(v));
    offset[v] = static_cast<Vertex>(n);
    ex.map.kinds.push_back(kind);
    std::vector<Vertex> image;
    for (Vertex x = 0; x < gd.graph.order(); ++x) image.push_back(static_cast<Vertex>(n + x));
    ex.map.vertex_image.push_back(std::move(image));
    n += gd.graph.order();
  }

  std::vector<Edge> edges;
  for (Vertex v = 0; v < h.order(); ++v)
    for (auto [x, y] : gadget(ex.map.kinds[v]).graph.edges()) edges.emplace_back(offset[v] + x, offset[v] + y);
  // the i-th incident edge of v uses the i-th attach point
  auto attach = [&](std::size_t id, Vertex v) {
    auto inc = h.incident(v);
    auto pos = static_cast<std::size_t>(std::find(inc.begin(), inc.end(), id) - inc.begin());
    return offset[v] + gadget(ex.map.kinds[v]).attach_points[pos];
  };
  for (std::size_t id = 0; id < h.edge_count(); ++id) {
    const auto& e = h.edge(id);
    Edge image{attach(id, e.u), attach(id, e.v)};
    ex.map.edge_image.push_back(image);
    edges.push_back(image);
  }
  ex.graph = Graph::from_edges(n, edges);
  auto cls = classify(ex.graph);
  if (!cls.connected || !cls.cubic || n != 18 * w.k)
    throw std::logic_error("expand_to_Gk: expansion is not a connected cubic graph of order 18k");
  return ex;
}

VertexSet canonical_dissociation_set(const HWitness& w, const Expansion& e) {
  const std::size_t n = e.graph.order();
  VertexSet d(n);
  for (auto id : w.M) {  // (i)
    d.insert(e.map.edge_image[id].first);
    d.insert(e.map.edge_image[id].second);
  }
  for (auto [id, head] : w.heads) {  // (ii) the tail's attach point
    const auto& he = w.H.edge(id);
    d.insert(head == he.v ? e.map.edge_image[id].first : e.map.edge_image[id].second);
  }
  for (Vertex v = 0; v < w.H.order(); ++v)  // (iii), (iv)
    for (Vertex x : gadget(e.map.kinds[v]).d_contribution.members()) d.insert(e.map.vertex_image[v][x]);
  if (d.size() != 10 * w.k || !is_dissociation_set(e.graph, d))
    throw std::logic_error("canonical dissociation set has size " + std::to_string(d.size()) +
                           " or is not a dissociation set (expected size " + std::to_string(10 * w.k) + ")");
  return d;
}

}  // namespace dissalpha
