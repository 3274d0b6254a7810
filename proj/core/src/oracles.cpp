#include <bit>
#include <string>
#include <vector>

#include "dissalpha/solvers.hpp"

namespace dissalpha {
namespace {

std::vector<std::uint32_t> small_masks(const Graph& g, const char* who) {
  if (g.order() > kOracleMaxOrder)
    throw std::invalid_argument(std::string(who) + ": order " + std::to_string(g.order()) +
                                " exceeds oracle limit " + std::to_string(kOracleMaxOrder));
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) adj[u] |= std::uint32_t{1} << v;
  return adj;
}

// Largest subset whose induced degrees are all <= cap.
std::size_t brute_force(const std::vector<std::uint32_t>& adj, int cap) {
  const std::size_t n = adj.size();
  const std::uint32_t end = n == 32 ? 0 : (std::uint32_t{1} << n);
  int best = 0;
  std::uint32_t s = 0;
  do {
    int size = std::popcount(s);
    if (size > best) {
      bool ok = true;
      for (std::uint32_t w = s; w != 0 && ok; w &= w - 1)
        ok = std::popcount(adj[std::countr_zero(w)] & s) <= cap;
      if (ok) best = size;
    }
    ++s;
  } while (s != end);
  return static_cast<std::size_t>(best);
}

}  // namespace

std::size_t oracle_mis(const Graph& g) { return brute_force(small_masks(g, "oracle_mis"), 0); }

std::size_t oracle_diss(const Graph& g) { return brute_force(small_masks(g, "oracle_diss"), 1); }

}  // namespace dissalpha
