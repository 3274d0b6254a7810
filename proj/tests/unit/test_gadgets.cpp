#include <gtest/gtest.h>

#include <functional>

#include "dissalpha/gadgets.hpp"
#include "dissalpha/isomorphism.hpp"
#include "dissalpha/named_graphs.hpp"
#include "dissalpha/rng.hpp"
#include "dissalpha/solvers.hpp"
#include "dissalpha/witness_io.hpp"
#include "test_support.hpp"

using namespace dissalpha;

namespace {

Multigraph random_multigraph(std::size_t n, std::size_t tries, SplitMix64& rng) {
  std::vector<MultiEdge> edges;
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t t = 0; t < tries; ++t) {
    Vertex u = rng() % n, v = rng() % n;
    if (u == v || deg[u] == 3 || deg[v] == 3) continue;
    edges.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  return Multigraph(n, edges);
}

// Every size-k edge subset passing validate_H for which an orientation exists.
std::vector<HWitness> witnesses_of(const Multigraph& h) {
  std::vector<HWitness> out;
  auto deg = multigraph_degrees(h);
  std::size_t sum = 0;
  for (auto d : deg) sum += d == 0 ? 100 : 4 - d;
  if (sum % 6 != 0) return out;
  const std::size_t k = sum / 6;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == k) {
      if (!validate_H(h, k, pick).ok()) return;
      if (auto o = find_orientation(h, pick)) out.push_back(HWitness{h, k, pick, *o, {}});
      return;
    }
    for (std::size_t id = from; id < h.edge_count(); ++id) {
      pick.push_back(id);
      rec(id + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST(Gadgets, LibraryValidates) {
  for (auto kind : {GadgetKind::Triangle, GadgetKind::K4Star, GadgetKind::Leaf9A, GadgetKind::Leaf9B})
    EXPECT_NO_THROW(validate_gadget(gadget(kind))) << gadget_kind_name(kind);
  const auto& k4 = gadget(GadgetKind::K4Star);
  EXPECT_TRUE(is_dissociation_set(k4.graph, k4.d_contribution));
  EXPECT_EQ(k4.d_contribution.size(), 2u);
  EXPECT_EQ(testsupport::brute_alpha(gadget(GadgetKind::Leaf9A).graph), 3u);
  EXPECT_EQ(testsupport::brute_alpha(gadget(GadgetKind::Leaf9B).graph), 3u);
  EXPECT_FALSE(is_isomorphic(gadget(GadgetKind::Leaf9A).graph, gadget(GadgetKind::Leaf9B).graph));
}

TEST(Gadgets, BrokenGadgetIsRejected) {
  Gadget g = gadget(GadgetKind::Triangle);
  g.attach_points.pop_back();
  EXPECT_THROW(validate_gadget(g), std::logic_error);
}

TEST(HFamily, NamedWitnessesValidate) {
  auto fig3 = named_witness("fig3");
  auto v3 = validate_H(fig3.H, 1, fig3.M);
  EXPECT_TRUE(v3.ok());
  EXPECT_EQ(v3.n3, 6u);
  auto figl = named_witness("figl");
  auto vl = validate_H(figl.H, 2, figl.M);
  EXPECT_TRUE(vl.ok());
  EXPECT_EQ(vl.n1, 1u);
  EXPECT_EQ(vl.n2, 3u);
  EXPECT_EQ(vl.n3, 3u);
  EXPECT_FALSE(validate_H(fig3.H, 2, fig3.M).ok());
  for (const auto& n : named_witness_names()) EXPECT_NO_THROW(validate_witness(named_witness(n))) << n;
}

TEST(HFamily, StructuralFailures) {
  // matching edges 0-1 and 2-3 joined by 1-2: not induced
  Multigraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  auto v = validate_H(path, 1, {0});
  EXPECT_FALSE(v.ok());  // degree-1 vertex 3 uncovered, equation 3+2+2+3 != 6
  EXPECT_FALSE(validate_H(path, 2, {0, 2}).ok());
  Multigraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_FALSE(validate_H(star, 2, {0}).ok());
  Multigraph split(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(validate_H(split, 2, {0, 1}).ok());
  EXPECT_TRUE(validate_H(Multigraph(2, {{0, 1}}), 1, {0}).ok());
}

TEST(Orientation, FlowAgreesWithBruteForce) {
  SplitMix64 rng(61);
  int found = 0, infeasible = 0;
  for (int t = 0; t < 600; ++t) {
    auto h = random_multigraph(2 + rng() % 7, 3 + rng() % 12, rng);
    // random matching, greedy over a shuffled edge order
    std::vector<std::size_t> ids(h.edge_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<char> used(h.order(), 0);
    std::vector<std::size_t> M;
    for (auto id : ids) {
      auto e = h.edge(id);
      if (used[e.u] || used[e.v] || rng() % 2) continue;
      used[e.u] = used[e.v] = 1;
      M.push_back(id);
    }
    auto o = find_orientation(h, M);
    ASSERT_EQ(o.has_value(), orientation_exists_brute_force(h, M));
    if (!o) {
      ++infeasible;
      continue;
    }
    ++found;
    std::vector<std::size_t> out(h.order(), 0);
    for (auto [id, head] : *o) ++out[h.other_end(id, head)];
    for (Vertex v = 0; v < h.order(); ++v)
      if (!used[v]) ASSERT_EQ(out[v], 2u);
  }
  EXPECT_GT(found, 10);
  EXPECT_GT(infeasible, 10);
}

TEST(Expansion, NamedWitnesses) {
  for (const auto& name : named_witness_names()) {
    auto w = named_witness(name);
    auto e = expand_to_Gk(w);
    auto c = classify(e.graph);
    EXPECT_TRUE(c.connected && c.cubic) << name;
    EXPECT_EQ(e.graph.order(), 18 * w.k) << name;
    auto D = canonical_dissociation_set(w, e);
    EXPECT_TRUE(is_dissociation_set(e.graph, D)) << name;
    EXPECT_EQ(D.size(), 10 * w.k) << name;
    EXPECT_EQ(max_independent_set(e.graph).value, 6 * w.k) << name;
    EXPECT_EQ(max_dissociation_set(e.graph).value, 10 * w.k) << name;
  }
  auto fig3 = named_graph("fig3");
  auto w = named_witness("fig3");
  auto e = expand_to_Gk(w);
  EXPECT_TRUE(is_isomorphic_marked(e.graph, canonical_dissociation_set(w, e), fig3.graph, *fig3.marked));
  EXPECT_TRUE(is_isomorphic(expand_to_Gk(named_witness("figl")).graph, named_graph("figl").graph));
}

TEST(Expansion, RandomFamilyMembersAreExtremal) {
  SplitMix64 rng(71);
  std::size_t checked = 0;
  for (int t = 0; t < 4000 && checked < 40; ++t) {
    auto h = random_multigraph(2 + rng() % 6, 4 + rng() % 10, rng);
    for (auto& w : witnesses_of(h)) {
      if (checked >= 40 || w.k > 2) break;
      for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) == 1 && rng() % 2) w.leaf_variants[v] = GadgetKind::Leaf9B;
      auto e = expand_to_Gk(w);
      auto D = canonical_dissociation_set(w, e);
      ASSERT_EQ(D.size(), 10 * w.k);
      ASSERT_EQ(max_independent_set(e.graph).value, 6 * w.k);
      ASSERT_EQ(max_dissociation_set(e.graph).value, 10 * w.k);
      ++checked;
    }
  }
  EXPECT_GE(checked, 20u);
}

TEST(WitnessIo, FilesMatchBuiltIns) {
  for (const auto& name : named_witness_names()) {
    auto w = load_witness(testsupport::witness_dir() / (name + ".json"));
    auto b = named_witness(name);
    EXPECT_EQ(w.H, b.H);
    EXPECT_EQ(w.k, b.k);
    EXPECT_EQ(w.M, b.M);
    EXPECT_EQ(w.heads, b.heads);
    EXPECT_EQ(w.leaf_variants, b.leaf_variants);
    EXPECT_EQ(witness_from_json(witness_to_json(b)).heads, b.heads);
  }
}

TEST(WitnessIo, OrientationIsOptionalAndErrorsAreReported) {
  auto j = witness_to_json(named_witness("fig3"));
  j.erase("orientation");
  auto w = witness_from_json(j);
  EXPECT_NO_THROW(validate_witness(w));
  auto bad = j;
  bad["edges"][0]["id"] = 99;
  EXPECT_THROW(witness_from_json(bad), std::invalid_argument);
  auto variant = witness_to_json(named_witness("figl"));
  variant["leaf_variants"][0]["variant"] = "LEAF9_C";
  EXPECT_THROW(witness_from_json(variant), std::invalid_argument);
  EXPECT_THROW(load_witness("/nonexistent/w.json"), std::invalid_argument);
}
