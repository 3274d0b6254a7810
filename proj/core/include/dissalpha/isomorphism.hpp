#pragma once

#include <optional>
#include <vector>

#include "dissalpha/graph.hpp"

namespace dissalpha {

/// Largest order accepted by the isomorphism test.
inline constexpr std::size_t kIsomorphismMaxOrder = 64;

/// Colour refinement run jointly on both graphs, then individualisation of a
/// smallest non-trivial cell with backtracking. Optional vertex colours must
/// be preserved by the map. Returns a map a -> b, or nullopt. Throws
/// std::invalid_argument when either order exceeds kIsomorphismMaxOrder or a
/// colour vector has the wrong length.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const std::vector<int>& colors_a = {},
                                                    const std::vector<int>& colors_b = {});

bool is_isomorphic(const Graph& a, const Graph& b);

/// Isomorphism that maps the set sa onto the set sb.
bool is_isomorphic_marked(const Graph& a, const VertexSet& sa, const Graph& b, const VertexSet& sb);

}  // namespace dissalpha
