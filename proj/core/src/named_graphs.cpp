#include "dissalpha/named_graphs.hpp"

#include <charconv>
#include <stdexcept>

#include "dissalpha/generators.hpp"

namespace dissalpha {
namespace {

NamedGraph make(std::string name, std::size_t n, std::vector<Edge> edges, std::size_t alpha,
                std::size_t diss, std::vector<Vertex> marked = {}) {
  NamedGraph g{std::move(name), Graph::from_edges(n, edges), std::nullopt, alpha, diss};
  if (!marked.empty()) g.marked = VertexSet::from_list(n, marked);
  return g;
}

// Cubic, order 18: six triangles contracted to a cubic multigraph on six
// vertices with one matching edge.
NamedGraph fig3() {
  return make("fig3", 18,
              {{0, 2},  {0, 4},   {0, 10},  {1, 3},   {1, 5},   {1, 11},  {2, 8},
               {2, 14}, {3, 9},   {3, 15},  {4, 10},  {4, 12},  {5, 11},  {5, 13},
               {6, 8},  {6, 12},  {6, 16},  {7, 9},   {7, 13},  {7, 17},  {8, 14},
               {9, 15}, {10, 11}, {12, 16}, {13, 17}, {14, 15}, {16, 17}},
              6, 10, {1, 2, 4, 5, 8, 9, 10, 15, 16, 17});
}

// Subcubic tree on 32 vertices meeting the bipartite bound with equality.
NamedGraph fig1_tree() {
  return make("fig1_tree", 32,
              {{0, 4},   {1, 5},   {1, 27},  {2, 6},   {2, 28},  {3, 7},   {3, 29},  {4, 16},
               {8, 12},  {9, 13},  {9, 27},  {10, 14}, {10, 28}, {11, 15}, {11, 29}, {12, 16},
               {13, 30}, {14, 31}, {16, 22}, {17, 22}, {17, 27}, {18, 23}, {19, 24}, {20, 25},
               {20, 28}, {21, 26}, {21, 29}, {23, 30}, {24, 31}, {25, 30}, {26, 31}},
              16, 26);
}

// Cubic, order 36, built from a seven-vertex multigraph with one leaf, three
// degree-2 and three degree-3 vertices.
NamedGraph figl() {
  return make("figl", 36,
              {{0, 1},   {0, 2},   {0, 4},   {1, 3},   {1, 5},   {2, 4},   {2, 7},   {3, 5},
               {3, 6},   {4, 6},   {5, 7},   {6, 8},   {7, 8},   {8, 33},  {9, 12},  {9, 18},
               {9, 21},  {10, 13}, {10, 19}, {10, 22}, {11, 14}, {11, 20}, {11, 23}, {12, 15},
               {12, 18}, {13, 16}, {13, 19}, {14, 17}, {14, 20}, {15, 24}, {15, 35}, {16, 25},
               {16, 30}, {17, 25}, {17, 26}, {18, 21}, {19, 22}, {20, 23}, {21, 24}, {22, 25},
               {23, 26}, {24, 26}, {27, 30}, {27, 33}, {27, 34}, {28, 29}, {28, 31}, {28, 34},
               {29, 32}, {29, 35}, {30, 33}, {31, 32}, {31, 34}, {32, 35}},
              12, 20, {2, 3, 4, 5, 8, 9, 10, 11, 16, 18, 19, 20, 24, 25, 26, 29, 31, 33, 34, 35});
}

// One K4* block and two K3 blocks plus two extra edges.
NamedGraph fig2_left() {
  return make("fig2_left", 12,
              {{0, 3}, {0, 5}, {0, 8}, {1, 6}, {1, 10}, {2, 7}, {2, 11}, {3, 4},
               {3, 5}, {4, 9}, {4, 11}, {5, 8}, {6, 10}, {7, 11}, {8, 9}, {9, 10}},
              4, 8, {0, 1, 2, 4, 5, 6, 7, 9});
}

NamedGraph fig2_right() {
  return make("fig2_right", 21,
              {{0, 7},   {0, 14},  {0, 18},  {1, 8},   {1, 15},  {1, 16},  {2, 9},
               {2, 16},  {3, 10},  {3, 17},  {4, 11},  {4, 18},  {4, 20},  {5, 12},
               {5, 19},  {6, 13},  {6, 20},  {7, 14},  {7, 19},  {8, 15},  {8, 17},
               {9, 16},  {10, 17}, {11, 14}, {11, 18}, {12, 15}, {12, 19}, {13, 20}},
              7, 14, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
NamedGraph petersen() {
  return make("petersen", 10,
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}},
              4, 6);
}

// LCF [5,-5]^7.
NamedGraph heawood() {
  return make("heawood", 14,
              {{0, 1},  {0, 5},  {0, 13},  {1, 2},   {1, 10},  {2, 3},   {2, 7},
               {3, 4},  {3, 12}, {4, 5},   {4, 9},   {5, 6},   {6, 7},   {6, 11},
               {7, 8},  {8, 9},  {8, 13},  {9, 10},  {10, 11}, {11, 12}, {12, 13}},
              7, 7);
}

}  // namespace

NamedGraph named_graph(std::string_view name) {
  if (name == "fig3") return fig3();
  if (name == "fig1_tree") return fig1_tree();
  if (name == "figl") return figl();
  if (name == "fig2_left") return fig2_left();
  if (name == "fig2_right") return fig2_right();
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "k4") return {"k4", complete_graph(4), std::nullopt, 1, 2};
  if (name == "k33") return {"k33", complete_bipartite(3, 3), std::nullopt, 3, 3};
  if (name.size() > 1 && name[0] == 'c') {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 3)
      return {std::string(name), cycle_graph(n), std::nullopt, n / 2, 2 * n / 3};
  }
  throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

HWitness named_witness(std::string_view name) {
  HWitness w;
  if (name == "fig3") {
    // a=0 b=1 c=2 d=3 e=4 f=5; M is e-f
    w.H = Multigraph(6, {{0, 2}, {1, 3}, {0, 4}, {1, 5}, {4, 2}, {5, 3}, {0, 1}, {2, 3}, {4, 5}});
    w.k = 1;
    w.M = {8};
    w.heads = {{6, 1}, {1, 3}, {7, 2}, {0, 0}, {2, 4}, {3, 5}, {4, 4}, {5, 5}};
  } else if (name == "figl") {
    // leaf 0, triangles 1..3, K4* vertices 4..6; edges 4 and 5 are parallel
    w.H = Multigraph(7, {{0, 1}, {4, 1}, {4, 5}, {1, 2}, {2, 3}, {2, 3}, {3, 6}, {5, 6}});
    w.k = 2;
    w.M = {0, 7};
    w.heads = {{1, 1}, {2, 5}, {4, 3}, {5, 2}, {6, 6}, {3, 1}};
    w.leaf_variants = {{0, GadgetKind::Leaf9B}};
  } else if (name == "k2") {
    w.H = Multigraph(2, {{0, 1}});
    w.k = 1;
    w.M = {0};
  } else {
    throw std::invalid_argument("unknown witness '" + std::string(name) + "'");
  }
  return w;
}

std::vector<std::string> named_witness_names() { return {"fig3", "figl", "k2"}; }

std::vector<std::string> named_graph_names() {
  return {"fig3", "fig1_tree", "figl", "fig2_left", "fig2_right", "petersen",
          "heawood", "k4", "k33", "c5", "c7"};
}

}  // namespace dissalpha
