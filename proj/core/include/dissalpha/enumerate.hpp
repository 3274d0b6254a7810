#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dissalpha/graph.hpp"

namespace dissalpha {

/// Largest order handled by the built-in enumerator (2^21 edge subsets).
inline constexpr std::size_t kEnumerateMaxOrder = 7;

struct EnumerateFilter {
  bool connected = true;
  bool subcubic = false;
  bool bipartite = false;
  bool triangle_free = false;
};

/// Canonical adjacency code for n <= 8: the smallest upper-triangle bit string
/// over vertex orders compatible with colour refinement. Equal codes iff
/// isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of order-n graphs passing the
/// filter, in increasing canonical code, each relabelled to its canonical
/// order. Throws std::invalid_argument for n > kEnumerateMaxOrder.
std::vector<Graph> enumerate_graphs(std::size_t n, const EnumerateFilter& filter);

}  // namespace dissalpha
