#include "dissalpha/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dissalpha/bounds.hpp"
#include "dissalpha/enumerate.hpp"
#include "dissalpha/gadgets.hpp"
#include "dissalpha/generators.hpp"
#include "dissalpha/graph6.hpp"
#include "dissalpha/isomorphism.hpp"
#include "dissalpha/named_graphs.hpp"
#include "dissalpha/random_procedure.hpp"
#include "dissalpha/recognizers.hpp"
#include "dissalpha/solvers.hpp"

namespace dissalpha {
namespace {

class Runner {
 public:
  // body returns an empty string on success, else what it observed
  void run(std::string name, const std::function<std::string()>& body) {
    SelfTestCase c{std::move(name), false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    cases.push_back(std::move(c));
  }
  std::vector<SelfTestCase> cases;
};

std::string expect_values(const Graph& g, std::size_t alpha, std::size_t diss) {
  auto a = max_independent_set(g).value;
  auto d = max_dissociation_set(g).value;
  if (a == alpha && d == diss) return {};
  std::ostringstream os;
  os << "alpha=" << a << " diss=" << d << ", expected " << alpha << "/" << diss;
  return os.str();
}

std::string fail_if(bool bad, const std::string& what) { return bad ? what : std::string(); }

bool regular_of(const Graph& g, std::size_t d) { return g.min_degree() == d && g.max_degree() == d; }

}  // namespace

std::vector<SelfTestCase> run_selftest() {
  Runner t;
  const auto fig3 = named_graph("fig3");
  const auto figl = named_graph("figl");
  const auto tree = named_graph("fig1_tree");

  t.run("subcubic tree classification", [&] {
    auto c = classify(tree.graph);
    return fail_if(!(c.connected && c.max_degree == 3 && c.subcubic && c.bipartite && c.triangle_free && c.tree),
                   "unexpected class");
  });
  t.run("fig3 marked set is five disjoint pairs", [&] {
    auto p = diss_profile(fig3.graph, *fig3.marked);
    return fail_if(fig3.marked->size() != 10 || p.pairs != 5 || p.isolated != 0, "profile differs");
  });
  t.run("fig3 multigraph is cubic", [] {
    auto deg = multigraph_degrees(named_witness("fig3").H);
    return fail_if(deg.size() != 6 || std::count(deg.begin(), deg.end(), 3) != 6, "degrees differ");
  });
  t.run("figl multigraph degrees 1/3/3", [] {
    auto v = validate_H(named_witness("figl").H, 2, named_witness("figl").M);
    return fail_if(v.n1 != 1 || v.n2 != 3 || v.n3 != 3, "degree counts differ");
  });
  t.run("alpha(K4) = 1", [] { return fail_if(max_independent_set(complete_graph(4)).value != 1, "differs"); });
  t.run("alpha(C7) = 3", [] { return fail_if(max_independent_set(cycle_graph(7)).value != 3, "differs"); });
  t.run("diss(C7) = 4", [] { return fail_if(max_dissociation_set(cycle_graph(7)).value != 4, "differs"); });
  t.run("diss(fig3) = 10", [&] { return fail_if(max_dissociation_set(fig3.graph).value != 10, "differs"); });
  t.run("fig3 certificate p=0 q=5 r=4 s=2", [&] {
    auto c = max_diss_max_isolated(fig3.graph);
    std::ostringstream os;
    os << "p=" << c.p << " q=" << c.q << " r=" << c.r << " s=" << c.s;
    return fail_if(c.p != 0 || c.q != 5 || c.r != 4 || c.s != 2, os.str());
  });
  t.run("fig3 cut identity 20 = 20", [&] {
    auto id = edge_count_identity(fig3.graph, max_diss_max_isolated(fig3.graph));
    return fail_if(id.from_d != 20 || id.from_complement != 20 || id.cut_edges != 20, "counts differ");
  });
  t.run("oracle diss(C6) = 4", [] { return fail_if(oracle_diss(cycle_graph(6)) != 4, "differs"); });
  t.run("C5 values", [] { return expect_values(cycle_graph(5), 2, 3); });
  t.run("K4 values", [] { return expect_values(complete_graph(4), 1, 2); });
  t.run("clique ring k=2 l=2", [] {
    auto g = clique_ring(2, 2);
    return g.order() != 8 || !regular_of(g, 4) ? "not an 8-vertex 4-regular graph" : expect_values(g, 2, 4);
  });
  t.run("clique ring k=2 l=3", [] {
    auto g = clique_ring(2, 3);
    return g.order() != 12 || !regular_of(g, 4) ? "not a 12-vertex 4-regular graph" : expect_values(g, 3, 6);
  });
  t.run("clique ring plus k=2 l=2", [] { return fail_if(!is_basic_extremal(clique_ring_plus(2, 2)), "2 alpha != diss"); });
  t.run("K4* values and marked set", [] {
    auto m = k4_star();
    if (!is_dissociation_set(m.graph, m.marked) || m.marked.size() != 4) return std::string("marked set invalid");
    return expect_values(m.graph, 2, 4);
  });
  t.run("single K3 block", [] {
    auto m = build_block_graph({{BlockKind::K3}, {}});
    return expect_values(m.graph, 1, 2);
  });
  t.run("fig2 left graph is basic extremal", [] {
    return fail_if(!is_basic_extremal(named_graph("fig2_left").graph), "2 alpha != diss");
  });
  t.run("fig3 named values", [&] {
    auto c = classify(fig3.graph);
    return !(c.cubic && c.connected && fig3.graph.order() == 18) ? "class differs" : expect_values(fig3.graph, 6, 10);
  });
  t.run("fig1 tree equality", [&] {
    auto a = max_independent_set(tree.graph).value;
    auto d = max_dissociation_set(tree.graph).value;
    return fail_if(Rational(a) != bound_triangle_free_subcubic_conjecture(d), "alpha differs from 5 diss/8 - 1/4");
  });
  t.run("figl named values", [&] {
    auto c = classify(figl.graph);
    return !(c.cubic && figl.graph.order() == 36) ? "class differs" : expect_values(figl.graph, 12, 20);
  });
  t.run("fig3 multigraph valid for k=1", [] {
    auto w = named_witness("fig3");
    auto v = validate_H(w.H, 1, w.M);
    return fail_if(!v.ok() || v.n3 != 6, "invalid");
  });
  t.run("figl multigraph valid for k=2", [] {
    auto w = named_witness("figl");
    auto v = validate_H(w.H, 2, w.M);
    return fail_if(!v.ok() || 3 * v.n1 + 2 * v.n2 + v.n3 != 12, "invalid");
  });
  t.run("fig3 orientation exists", [] {
    auto w = named_witness("fig3");
    return fail_if(!find_orientation(w.H, w.M), "none found");
  });
  t.run("K4* gadget contribution", [] {
    const auto& g = gadget(GadgetKind::K4Star);
    return fail_if(!is_dissociation_set(g.graph, g.d_contribution) || g.d_contribution.size() != 2, "differs");
  });
  t.run("first leaf gadget alpha = 3", [] {
    return fail_if(max_independent_set(gadget(GadgetKind::Leaf9A).graph).value != 3, "differs");
  });
  t.run("fig3 expansion is fig3", [&] {
    return fail_if(!is_isomorphic(expand_to_Gk(named_witness("fig3")).graph, fig3.graph), "not isomorphic");
  });
  t.run("figl expansion is figl", [&] {
    return fail_if(!is_isomorphic(expand_to_Gk(named_witness("figl")).graph, figl.graph), "not isomorphic");
  });
  t.run("fig3 canonical set is the marked set", [&] {
    auto w = named_witness("fig3");
    auto e = expand_to_Gk(w);
    auto D = canonical_dissociation_set(w, e);
    return fail_if(!is_isomorphic_marked(e.graph, D, fig3.graph, *fig3.marked), "no marked isomorphism");
  });
  t.run("K2 witness canonical set has size 10", [] {
    auto w = named_witness("k2");
    return fail_if(canonical_dissociation_set(w, expand_to_Gk(w)).size() != 10, "differs");
  });
  t.run("figl canonical set has size 20", [] {
    auto w = named_witness("figl");
    return fail_if(canonical_dissociation_set(w, expand_to_Gk(w)).size() != 20, "differs");
  });
  t.run("basic extremal K4 / C5 / clique ring", [] {
    return fail_if(!is_basic_extremal(complete_graph(4)) || is_basic_extremal(cycle_graph(5)) ||
                       !is_basic_extremal(clique_ring(2, 2)),
                   "differs");
  });
  t.run("K3 decomposes into one K3 block", [] {
    auto d = decompose_block_graph(complete_graph(3));
    return fail_if(!d || d->blocks.size() != 1 || d->blocks[0].kind != BlockKind::K3 || d->marked.size() != 2,
                   "differs");
  });
  t.run("fig2 left decomposition has one K4*", [] {
    auto d = decompose_block_graph(named_graph("fig2_left").graph);
    if (!d) return std::string("no decomposition");
    auto k4 = std::count_if(d->blocks.begin(), d->blocks.end(), [](const Block& b) { return b.kind == BlockKind::K4Star; });
    return fail_if(k4 != 1, "K4* count " + std::to_string(k4));
  });
  t.run("fig3 witness verifies", [&] { return fail_if(!verify_Gk_witness(fig3.graph, named_witness("fig3")), "no"); });
  t.run("figl witness verifies", [&] { return fail_if(!verify_Gk_witness(figl.graph, named_witness("figl")), "no"); });
  t.run("fig3 extremal cubic profile", [&] {
    auto p = cubic_extremal_profile(fig3.graph);
    return fail_if(!p || !p->violation.empty() || p->k != 1 || p->p != 0 || p->q != 5 || p->r != 4 || p->s != 2 ||
                       p->alpha != 6,
                   "differs");
  });
  t.run("figl extremal cubic profile", [&] {
    auto p = cubic_extremal_profile(figl.graph);
    return fail_if(!p || !p->violation.empty() || p->k != 2, "differs");
  });
  t.run("K4 basic bound tight", [] {
    auto r = check_all_bounds(complete_graph(4));
    return fail_if(r.get("basic").value != 1 || !r.get("basic").tight, "differs");
  });
  t.run("fig3 cubic bound tight, basic slack", [&] {
    auto r = check_all_bounds(fig3.graph);
    return fail_if(r.get("cubic").value != 6 || !r.get("cubic").tight || r.get("basic").tight, "differs");
  });
  t.run("bipartite bound at degree 3", [] {
    for (std::size_t d = 0; d <= 40; ++d)
      if (bound_bipartite(d, 3) != Rational(5 * d, 8) - Rational(1, 4)) return "differs at diss=" + std::to_string(d);
    return std::string();
  });
  t.run("fig1 tree bipartite bound tight", [&] {
    auto r = check_all_bounds(tree.graph);
    return fail_if(!r.get("bipartite").applicable || !r.get("bipartite").tight, "not tight");
  });
  t.run("triangle-free cubic factor 11/20", [] {
    return fail_if(triangle_free_regular_factor(3) != Rational(11, 20), to_string(triangle_free_regular_factor(3)));
  });
  t.run("fig3 marked stats p=0 q=5", [&] {
    auto s = diss_partition_stats(fig3.graph, *fig3.marked);
    return fail_if(s.p != 0 || s.q != 5, "differs");
  });
  t.run("Petersen R3 frequency 1/8", [] {
    auto g = named_graph("petersen").graph;
    auto D = max_dissociation_set(g).witness;
    auto st = diss_partition_stats(g, D);
    if (st.p != 0 || st.q != 3 || st.r != std::vector<std::size_t>{0, 0, 0, 4}) return std::string("stats differ");
    auto mc = montecarlo_I2(g, D, 100000, 20240601);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (D.contains(v)) continue;
      if (!mc.frequency_within(v, Rational(1, 8), 3))
        return "vertex " + std::to_string(v) + " hits " + std::to_string(mc.hits[v]);
    }
    return std::string();
  });
  t.run("K4 graph6 record", [] {
    auto g = parse_record("C~");
    return g == complete_graph(4) ? expect_values(g, 1, 2) : std::string("decoded graph differs");
  });
  t.run("block family iff 2 alpha = diss, n <= 7", [] {
    EnumerateFilter f;
    f.subcubic = true;
    for (std::size_t n = 1; n <= 7; ++n)
      for (const auto& g : enumerate_graphs(n, f))
        if (decompose_block_graph(g).has_value() != is_basic_extremal(g)) return "mismatch on " + encode_graph6(g);
    return std::string();
  });
  return t.cases;
}

}  // namespace dissalpha
