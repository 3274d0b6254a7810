#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dissalpha/gadgets.hpp"
#include "dissalpha/graph.hpp"

namespace dissalpha {

/// A fixed graph with the independence and dissociation numbers it is known
/// to have. `marked` is set for the drawings that highlight a maximum
/// dissociation set.
struct NamedGraph {
  std::string name;
  Graph graph;
  std::optional<VertexSet> marked;
  std::size_t alpha = 0;
  std::size_t diss = 0;
};

/// Names: fig3, fig1_tree, figl, fig2_left, fig2_right, petersen, k4, k33,
/// heawood, and c<n> for n >= 3. Throws std::invalid_argument otherwise.
NamedGraph named_graph(std::string_view name);

/// Every fixed name (the cycle family is represented by c5 and c7).
std::vector<std::string> named_graph_names();

/// Multigraph witnesses: "fig3" (k=1, expands to fig3), "figl" (k=2, expands
/// to figl with the LEAF9_B leaf) and "k2" (k=1, a single matching edge).
HWitness named_witness(std::string_view name);
std::vector<std::string> named_witness_names();

}  // namespace dissalpha
