#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "dissalpha/gadgets.hpp"

namespace dissalpha {
namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using FlowEdge = Traits::edge_descriptor;

class Network {
 public:
  explicit Network(std::size_t nodes) : g_(nodes) {}

  FlowEdge arc(std::size_t from, std::size_t to, long cap) {
    auto capacity = boost::get(boost::edge_capacity, g_);
    auto reverse = boost::get(boost::edge_reverse, g_);
    FlowEdge e = boost::add_edge(from, to, g_).first;
    FlowEdge r = boost::add_edge(to, from, g_).first;
    capacity[e] = cap;
    capacity[r] = 0;
    reverse[e] = r;
    reverse[r] = e;
    return e;
  }

  long max_flow(std::size_t s, std::size_t t) { return boost::push_relabel_max_flow(g_, s, t); }

  long flow(FlowEdge e) const {
    return boost::get(boost::edge_capacity, g_, e) - boost::get(boost::edge_residual_capacity, g_, e);
  }

 private:
  FlowGraph g_;
};

bool covered_mask(const Multigraph& h, const std::vector<std::size_t>& M, std::vector<char>& covered,
                  std::set<std::size_t>& in_m) {
  covered.assign(h.order(), 0);
  for (auto id : M) {
    if (id >= h.edge_count()) return false;
    in_m.insert(id);
    covered[h.edge(id).u] = covered[h.edge(id).v] = 1;
  }
  return true;
}

}  // namespace

// Nodes: s, t, one per non-M edge, one per H-vertex, then S', T'. The edge
// node sends its unit to the endpoint that becomes the tail. Lower bounds
// (every edge oriented; uncovered vertices get exactly two tails) are removed
// by the standard circulation transform with a t -> s return arc.
std::optional<std::map<std::size_t, Vertex>> find_orientation(const Multigraph& h,
                                                              const std::vector<std::size_t>& M) {
  std::vector<char> covered;
  std::set<std::size_t> in_m;
  if (!covered_mask(h, M, covered, in_m)) return std::nullopt;

  std::vector<std::size_t> free_edges;
  for (std::size_t id = 0; id < h.edge_count(); ++id)
    if (!in_m.count(id)) free_edges.push_back(id);
  const std::size_t m = free_edges.size();
  const std::size_t s = 0, t = 1, edge0 = 2, vert0 = edge0 + m, S = vert0 + h.order(), T = S + 1;
  Network net(T + 1);
  std::vector<long> excess(T + 1, 0);
  auto lower = [&](std::size_t from, std::size_t to, long lo, long hi) {
    excess[to] += lo;
    excess[from] -= lo;
    if (hi > lo) net.arc(from, to, hi - lo);
  };

  std::vector<std::pair<FlowEdge, FlowEdge>> choice;  // (to u, to v) per free edge
  std::vector<std::size_t> free_degree(h.order(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = h.edge(free_edges[i]);
    lower(s, edge0 + i, 1, 1);
    choice.emplace_back(net.arc(edge0 + i, vert0 + e.u, 1), net.arc(edge0 + i, vert0 + e.v, 1));
    ++free_degree[e.u];
    ++free_degree[e.v];
  }
  for (Vertex v = 0; v < h.order(); ++v) {
    if (covered[v]) {
      if (free_degree[v] > 0) net.arc(vert0 + v, t, static_cast<long>(free_degree[v]));
    } else {
      lower(vert0 + v, t, 2, 2);
    }
  }
  net.arc(t, s, static_cast<long>(m) + 1);
  long demand = 0;
  for (std::size_t x = 0; x < S; ++x) {
    if (excess[x] > 0) {
      net.arc(S, x, excess[x]);
      demand += excess[x];
    } else if (excess[x] < 0) {
      net.arc(x, T, -excess[x]);
    }
  }
  if (net.max_flow(S, T) != demand) return std::nullopt;

  std::map<std::size_t, Vertex> heads;
  std::vector<std::size_t> out(h.order(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = h.edge(free_edges[i]);
    const bool tail_u = net.flow(choice[i].first) == 1;
    const bool tail_v = net.flow(choice[i].second) == 1;
    if (tail_u == tail_v) throw std::logic_error("find_orientation: edge unit split or lost");
    heads[free_edges[i]] = tail_u ? e.v : e.u;
    ++out[tail_u ? e.u : e.v];
  }
  for (Vertex v = 0; v < h.order(); ++v)
    if (!covered[v] && out[v] != 2) throw std::logic_error("find_orientation: out-degree postcondition violated");
  return heads;
}

bool orientation_exists_brute_force(const Multigraph& h, const std::vector<std::size_t>& M) {
  std::vector<char> covered;
  std::set<std::size_t> in_m;
  if (!covered_mask(h, M, covered, in_m)) return false;
  std::vector<std::size_t> free_edges;
  for (std::size_t id = 0; id < h.edge_count(); ++id)
    if (!in_m.count(id)) free_edges.push_back(id);
  if (free_edges.size() > 24) throw std::invalid_argument("orientation_exists_brute_force: too many edges");
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << free_edges.size()); ++bits) {
    std::vector<std::size_t> out(h.order(), 0);
    for (std::size_t i = 0; i < free_edges.size(); ++i) {
      const auto& e = h.edge(free_edges[i]);
      ++out[((bits >> i) & 1U) ? e.v : e.u];
    }
    bool ok = true;
    for (Vertex v = 0; v < h.order() && ok; ++v) ok = covered[v] || out[v] == 2;
    if (ok) return true;
  }
  return false;
}

}  // namespace dissalpha
