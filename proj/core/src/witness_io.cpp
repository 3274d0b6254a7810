#include "dissalpha/witness_io.hpp"

#include <fstream>
#include <stdexcept>

namespace dissalpha {
namespace {

GadgetKind leaf_kind(const std::string& name) {
  if (name == "LEAF9_A") return GadgetKind::Leaf9A;
  if (name == "LEAF9_B") return GadgetKind::Leaf9B;
  throw std::invalid_argument("witness: unknown leaf variant '" + name + "'");
}

}  // namespace

HWitness witness_from_json(const nlohmann::json& j) {
  try {
    HWitness w;
    const auto n = j.at("n").get<std::size_t>();
    w.k = j.at("k").get<std::size_t>();
    const auto& edges = j.at("edges");
    std::vector<MultiEdge> list(edges.size());
    std::vector<char> seen(edges.size(), 0);
    for (const auto& e : edges) {
      auto id = e.at("id").get<std::size_t>();
      if (id >= edges.size() || seen[id]) throw std::invalid_argument("witness: edge ids must be 0..m-1 without repeats");
      seen[id] = 1;
      list[id] = MultiEdge{e.at("u").get<Vertex>(), e.at("v").get<Vertex>()};
    }
    w.H = Multigraph(n, std::move(list));
    w.M = j.at("M").get<std::vector<std::size_t>>();
    if (j.contains("orientation"))
      for (const auto& o : j.at("orientation")) {
        auto id = o.at("edge").get<std::size_t>();
        if (!w.heads.emplace(id, o.at("head").get<Vertex>()).second)
          throw std::invalid_argument("witness: edge " + std::to_string(id) + " oriented twice");
      }
    if (j.contains("leaf_variants"))
      for (const auto& l : j.at("leaf_variants"))
        w.leaf_variants[l.at("vertex").get<Vertex>()] = leaf_kind(l.at("variant").get<std::string>());
    if (!j.contains("orientation")) {
      auto heads = find_orientation(w.H, w.M);
      if (!heads) throw std::invalid_argument("witness: no orientation of H - M exists");
      w.heads = std::move(*heads);
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("witness: ") + e.what());
  }
}

nlohmann::json witness_to_json(const HWitness& w) {
  nlohmann::json j;
  j["n"] = w.H.order();
  j["k"] = w.k;
  j["edges"] = nlohmann::json::array();
  for (std::size_t id = 0; id < w.H.edge_count(); ++id)
    j["edges"].push_back({{"id", id}, {"u", w.H.edge(id).u}, {"v", w.H.edge(id).v}});
  j["M"] = w.M;
  j["orientation"] = nlohmann::json::array();
  for (auto [id, head] : w.heads) j["orientation"].push_back({{"edge", id}, {"head", head}});
  if (!w.leaf_variants.empty()) {
    j["leaf_variants"] = nlohmann::json::array();
    for (auto [v, kind] : w.leaf_variants)
      j["leaf_variants"].push_back({{"vertex", v}, {"variant", gadget_kind_name(kind)}});
  }
  return j;
}

HWitness load_witness(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open witness file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("witness file " + path.string() + ": " + e.what());
  }
  return witness_from_json(j);
}

}  // namespace dissalpha
