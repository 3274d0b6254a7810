#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dissalpha/graph.hpp"

namespace dissalpha {

enum class GadgetKind { Triangle, K4Star, Leaf9A, Leaf9B };

const char* gadget_kind_name(GadgetKind kind);

/// Replacement graph for one vertex of the multigraph H. External edges of H
/// are attached at `attach_points` (one per incident edge, in incidence
/// order). `d_contribution` is the part of the canonical dissociation set that
/// does not depend on M or the orientation.
struct Gadget {
  GadgetKind kind;
  Graph graph;
  std::vector<Vertex> attach_points;
  VertexSet d_contribution;
};

/// Checks order, degrees, attach points, independence number and the
/// structure of d_contribution; throws std::logic_error on failure.
void validate_gadget(const Gadget& g);

/// The four gadgets, each validated on first use.
const Gadget& gadget(GadgetKind kind);

/// A member of the multigraph family: H, the induced matching M (edge ids) and
/// an orientation of H - M given as the head of each non-M edge.
struct HWitness {
  Multigraph H;
  std::size_t k = 0;
  std::vector<std::size_t> M;
  std::map<std::size_t, Vertex> heads;  ///< edge id -> head vertex
  std::map<Vertex, GadgetKind> leaf_variants;  ///< degree-1 vertex -> Leaf9A/Leaf9B
};

/// One entry per failed clause; ok() when empty. Orientation existence is not
/// checked here.
struct HValidation {
  std::size_t n1 = 0, n2 = 0, n3 = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

HValidation validate_H(const Multigraph& h, std::size_t k, const std::vector<std::size_t>& M);

/// Orientation of H - M (edge id -> head) giving every vertex not covered by M
/// out-degree exactly 2, or nullopt. Max-flow with lower bounds; the returned
/// orientation is re-checked before it is returned.
std::optional<std::map<std::size_t, Vertex>> find_orientation(const Multigraph& h,
                                                              const std::vector<std::size_t>& M);

/// Exhaustive reference for find_orientation (at most 24 non-M edges).
bool orientation_exists_brute_force(const Multigraph& h, const std::vector<std::size_t>& M);

/// Throws std::invalid_argument describing the first problem: structural
/// clause, orientation coverage, out-degrees, or leaf variant entries.
void validate_witness(const HWitness& w);

struct ExpansionMap {
  std::vector<GadgetKind> kinds;                 ///< per H-vertex
  std::vector<std::vector<Vertex>> vertex_image;  ///< per H-vertex, gadget-local order
  std::vector<Edge> edge_image;                   ///< per H-edge: (image at u, image at v)
};

struct Expansion {
  Graph graph;
  ExpansionMap map;
};

/// Gadgets are laid out consecutively in H-vertex order. Leaf variants default
/// to Leaf9A. The result is checked to be connected, cubic and of order 18k.
Expansion expand_to_Gk(const HWitness& w);

/// M endpoints, tails of oriented edges, and every gadget's d_contribution.
/// Throws std::logic_error unless the result is a dissociation set of size 10k.
VertexSet canonical_dissociation_set(const HWitness& w, const Expansion& e);

}  // namespace dissalpha
