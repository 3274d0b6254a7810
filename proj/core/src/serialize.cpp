#include "dissalpha/serialize.hpp"

namespace dissalpha {

using nlohmann::json;

json to_json(const Rational& r) { return to_string(r); }

json to_json(const VertexSet& s) { return s.members(); }

json to_json(const GraphClass& c) {
  return {{"connected", c.connected}, {"max_degree", c.max_degree}, {"min_degree", c.min_degree},
          {"regular", c.regular},     {"cubic", c.cubic},           {"subcubic", c.subcubic},
          {"triangle_free", c.triangle_free}, {"bipartite", c.bipartite}, {"tree", c.tree}};
}

json to_json(const BoundRecord& b) {
  json j{{"name", b.name}, {"applicable", b.applicable}, {"proven", b.proven}};
  if (b.applicable) {
    j["value"] = to_json(b.value);
    j["satisfied"] = b.satisfied;
    j["tight"] = b.tight;
  }
  return j;
}

json to_json(const BoundReport& r) {
  json bounds = json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  return {{"alpha", r.alpha},
          {"diss", r.diss},
          {"bounds", bounds},
          {"proven_violation", r.proven_violation()},
          {"conjecture_violation", r.conjecture_violation()}};
}

json to_json(const BlockDecomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back({{"kind", block_kind_name(b.kind)}, {"vertices", b.vertices}});
  json extra = json::array();
  for (auto [u, v] : d.extra_edges) extra.push_back({u, v});
  return {{"complete_graph_k4", d.complete_graph_k4},
          {"blocks", blocks},
          {"extra_edges", extra},
          {"marked", to_json(d.marked)}};
}

json to_json(const CubicExtremalProfile& p) {
  json j{{"n", p.n}, {"k", p.k}, {"alpha", p.alpha}, {"diss", p.diss},
         {"p", p.p}, {"q", p.q}, {"r", p.r},         {"s", p.s}};
  if (!p.violation.empty()) j["violation"] = p.violation;
  return j;
}

json to_json(const DissCertificate& c) {
  return {{"D", to_json(c.D)}, {"p", c.p}, {"q", c.q}, {"r", c.r}, {"s", c.s},
          {"complement_is_dissociation", c.complement_is_dissociation}};
}

json to_json(const PartitionStats& s) {
  return {{"max_degree", s.max_degree}, {"regular", s.regular}, {"p", s.p}, {"q", s.q},
          {"D0", to_json(s.D0)},        {"D1", to_json(s.D1)},  {"r", s.r}};
}

json to_json(const MCResult& r) {
  return {{"trials", r.trials},
          {"seed", r.seed},
          {"sum", r.sum},
          {"sum_squares", r.sum_squares},
          {"mean", to_json(r.mean())},
          {"stderr_squared", to_json(r.stderr_squared())},
          {"exact_expectation", to_json(r.exact_expectation)},
          {"hits", r.hits}};
}

}  // namespace dissalpha
