#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dissalpha/graph.hpp"
#include "dissalpha/graph6.hpp"

namespace testsupport {

using dissalpha::Graph;
using dissalpha::Vertex;

inline std::filesystem::path corpus_dir() { return DISSALPHA_CORPUS_DIR; }
inline std::filesystem::path witness_dir() { return DISSALPHA_WITNESS_DIR; }

inline std::vector<Graph> load_corpus(const std::string& file) {
  std::ifstream in(corpus_dir() / file);
  if (!in) throw std::runtime_error("missing corpus file " + file);
  std::vector<Graph> out;
  dissalpha::RecordReader reader(in);
  dissalpha::RecordReader::Entry e;
  while (reader.next(e)) {
    if (!e.graph) throw std::runtime_error(file + ":" + std::to_string(e.line) + ": " + e.error);
    out.push_back(*e.graph);
  }
  return out;
}

inline std::vector<std::string> load_lines(const std::string& file) {
  std::ifstream in(corpus_dir() / file);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

// Reference values by plain subset enumeration over adjacency words. Written
// separately from the library oracles so the two can check each other.
inline std::vector<std::uint32_t> words(const Graph& g) {
  if (g.order() > 22) throw std::invalid_argument("brute force limited to 22 vertices");
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  return adj;
}

inline std::size_t brute_alpha(const Graph& g) {
  auto adj = words(g);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
    bool ok = true;
    for (std::uint32_t w = s; w && ok; w &= w - 1) ok = (adj[__builtin_ctz(w)] & s) == 0;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(s));
  }
  return best;
}

inline std::size_t brute_diss(const Graph& g) {
  auto adj = words(g);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
    bool ok = true;
    for (std::uint32_t w = s; w && ok; w &= w - 1) ok = __builtin_popcount(adj[__builtin_ctz(w)] & s) <= 1;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace testsupport
