// dissalpha: exact independence / dissociation numbers, extremal families and
// bound checks over graph6 streams. Every command writes JSON lines or graph6
// lines to stdout (or --out).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dissalpha/bounds.hpp"
#include "dissalpha/enumerate.hpp"
#include "dissalpha/gadgets.hpp"
#include "dissalpha/generators.hpp"
#include "dissalpha/graph6.hpp"
#include "dissalpha/named_graphs.hpp"
#include "dissalpha/random_procedure.hpp"
#include "dissalpha/recognizers.hpp"
#include "dissalpha/rng.hpp"
#include "dissalpha/selftest.hpp"
#include "dissalpha/serialize.hpp"
#include "dissalpha/solvers.hpp"
#include "dissalpha/survey.hpp"
#include "dissalpha/witness_io.hpp"

using namespace dissalpha;
using nlohmann::json;

namespace {

constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string in = "-";
  std::string out = "-";
  long budget_ms = 0;
};

class Io {
 public:
  explicit Io(const Common& c) {
    if (c.in != "-") {
      file_in_ = std::make_unique<std::ifstream>(c.in);
      if (!*file_in_) throw CLI::ValidationError("--in", "cannot open " + c.in);
    }
    if (c.out != "-") {
      file_out_ = std::make_unique<std::ofstream>(c.out);
      if (!*file_out_) throw CLI::ValidationError("--out", "cannot open " + c.out);
    }
  }
  std::istream& in() { return file_in_ ? *file_in_ : std::cin; }
  std::ostream& out() { return file_out_ ? *file_out_ : std::cout; }

 private:
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
};

SolveOptions solve_options(const Common& c) {
  SolveOptions so;
  if (c.budget_ms > 0) so.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(c.budget_ms);
  return so;
}

json error_line(const RecordReader::Entry& e, const std::string& status, const std::string& msg) {
  return {{"line", e.line}, {"graph6", e.text}, {"status", status}, {"error", msg}};
}

// Runs body on every record; parse errors, timeouts and oversize graphs are
// reported per line and never stop the stream.
template <class Body>
void for_each_record(Io& io, const Common& c, Body body) {
  RecordReader reader(io.in());
  RecordReader::Entry e;
  while (reader.next(e)) {
    json j;
    if (!e.graph) {
      j = error_line(e, "parse_error", e.error);
    } else if (e.graph->order() > kSolverMaxOrder) {
      j = error_line(e, "unsupported", "order exceeds " + std::to_string(kSolverMaxOrder));
    } else {
      try {
        j = {{"line", e.line}, {"graph6", e.text}, {"status", "ok"}};
        body(*e.graph, solve_options(c), j);
      } catch (const SolveTimeout&) {
        j = error_line(e, "timeout", "exceeded " + std::to_string(c.budget_ms) + " ms");
      } catch (const std::invalid_argument& ex) {
        j = error_line(e, "invalid", ex.what());
      }
    }
    io.out() << j.dump() << '\n';
  }
}

void add_common(CLI::App* app, Common& c, bool with_in = true) {
  if (with_in) app->add_option("--in", c.in, "graph6/sparse6 input file, - for stdin");
  app->add_option("--out", c.out, "output file, - for stdout");
  app->add_option("--budget-ms", c.budget_ms, "per-graph solve budget in milliseconds (0: none)")
      ->check(CLI::NonNegativeNumber);
}

// ---- gen ----------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t k = 2, l = 2, n = 10, count = 1, max_blocks = 6;
  std::uint64_t seed = 1;
  std::string sidecar;
};

std::vector<MarkedGraph> generate(const GenArgs& a) {
  std::vector<MarkedGraph> out;
  auto plain = [](Graph g) { return MarkedGraph{g, VertexSet(g.order())}; };
  if (a.family == "Gkl") return {plain(clique_ring(a.k, a.l))};
  if (a.family == "Gprimekl") return {plain(clique_ring_plus(a.k, a.l))};
  if (a.family == "cycle") return {plain(cycle_graph(a.n))};
  if (a.family == "complete") return {plain(complete_graph(a.n))};
  if (a.family == "path") return {plain(path_graph(a.n))};
  if (a.family == "k4star") return {k4_star()};
  SplitMix64 rng(a.seed);
  if (a.family == "calG") {
    for (std::size_t i = 0; i < a.count; ++i) out.push_back(build_block_graph(random_block_spec(a.max_blocks, rng)));
    return out;
  }
  std::map<std::string, Graph (*)(std::size_t, SplitMix64&)> random{
      {"random-subcubic", random_subcubic},
      {"random-tf-subcubic", random_connected_triangle_free_subcubic},
      {"random-cubic", [](std::size_t n, SplitMix64& r) { return random_cubic(n, r); }},
      {"random-tf-cubic", [](std::size_t n, SplitMix64& r) { return random_cubic(n, r, true); }},
  };
  if (auto it = random.find(a.family); it != random.end()) {
    for (std::size_t i = 0; i < a.count; ++i) out.push_back(plain(it->second(a.n, rng)));
    return out;
  }
  auto named = named_graph(a.family);
  return {MarkedGraph{named.graph, named.marked.value_or(VertexSet(named.graph.order()))}};
}

int run_gen(const GenArgs& a, const Common& c) {
  Io io(c);
  std::unique_ptr<std::ofstream> side;
  if (!a.sidecar.empty()) side = std::make_unique<std::ofstream>(a.sidecar);
  for (const auto& m : generate(a)) {
    io.out() << encode_graph6(m.graph) << '\n';
    if (side) *side << json{{"graph6", encode_graph6(m.graph)}, {"marked", to_json(m.marked)}}.dump() << '\n';
  }
  return 0;
}

// ---- expand / recognize -----------------------------------------------------------

int run_expand(const std::string& witness, const std::string& sidecar, const Common& c) {
  Io io(c);
  auto w = load_witness(witness);
  validate_witness(w);
  auto e = expand_to_Gk(w);
  auto D = canonical_dissociation_set(w, e);
  io.out() << encode_graph6(e.graph) << '\n';
  if (!sidecar.empty()) {
    json kinds = json::array();
    for (auto k : e.map.kinds) kinds.push_back(gadget_kind_name(k));
    std::ofstream(sidecar) << json{{"k", w.k},
                                   {"n", e.graph.order()},
                                   {"canonical_dissociation_set", to_json(D)},
                                   {"gadget_kinds", kinds},
                                   {"vertex_image", e.map.vertex_image}}
                                  .dump()
                           << '\n';
  }
  return 0;
}

int run_recognize(const std::string& family, const std::string& witness, const Common& c) {
  Io io(c);
  std::optional<HWitness> w;
  if (family == "Gk") {
    if (witness.empty()) throw CLI::ValidationError("--witness", "required for --family Gk");
    w = load_witness(witness);
  }
  for_each_record(io, c, [&](const Graph& g, const SolveOptions& so, json& j) {
    if (family == "calG") {
      auto cls = classify(g);
      if (!cls.connected || !cls.subcubic) {
        j["member"] = false;
        j["reason"] = "not connected subcubic";
        return;
      }
      auto d = decompose_block_graph(g, so);
      j["member"] = d.has_value();
      if (d) j["decomposition"] = to_json(*d);
    } else if (family == "basic") {
      j["member"] = is_basic_extremal(g, so);
    } else if (family == "cubic-extremal") {
      auto p = cubic_extremal_profile(g, so);
      j["member"] = p.has_value();
      if (p) j["profile"] = to_json(*p);
    } else {
      j["member"] = verify_Gk_witness(g, *w);
    }
  });
  return 0;
}

// ---- solve / bounds / montecarlo ---------------------------------------------------

int run_solve(const std::string& what, const Common& c) {
  Io io(c);
  for_each_record(io, c, [&](const Graph& g, const SolveOptions& so, json& j) {
    j["n"] = g.order();
    if (what == "alpha" || what == "both") {
      auto r = max_independent_set(g, so);
      j["alpha"] = r.value;
      j["independent_set"] = to_json(r.witness);
    }
    if (what == "diss" || what == "both") {
      auto r = max_dissociation_set(g, so);
      j["diss"] = r.value;
      j["dissociation_set"] = to_json(r.witness);
    }
    if (what == "certificate") {
      auto cert = max_diss_max_isolated(g, so);
      j["diss"] = cert.D.size();
      j["certificate"] = to_json(cert);
    }
  });
  return 0;
}

int run_bounds(const Common& c) {
  Io io(c);
  bool violated = false;
  for_each_record(io, c, [&](const Graph& g, const SolveOptions& so, json& j) {
    auto r = check_all_bounds(g, so);
    violated = violated || r.proven_violation();
    j["class"] = to_json(r.cls);
    j["report"] = to_json(r);
  });
  return violated ? kExitFalsified : 0;
}

int run_montecarlo(std::uint64_t trials, std::uint64_t seed, unsigned z, const Common& c) {
  Io io(c);
  for_each_record(io, c, [&](const Graph& g, const SolveOptions& so, json& j) {
    auto D = max_dissociation_set(g, so).witness;
    j["triangle_free"] = is_triangle_free(g);
    j["dissociation_set"] = to_json(D);
    auto st = diss_partition_stats(g, D);
    j["stats"] = to_json(st);
    if (st.regular && st.max_degree > 0) j["expected_formula"] = to_json(expected_I2_exact(st));
    auto mc = montecarlo_I2(g, D, trials, seed);
    j["result"] = to_json(mc);
    j["mean_within_z"] = mc.mean_within(z);
    j["z"] = z;
  });
  return 0;
}

int run_survey_cmd(std::size_t exhaustive, const EnumerateFilter& filter, bool have_in, const Common& c) {
  Io io(c);
  std::vector<RecordReader::Entry> entries;
  if (exhaustive > 0) entries = enumerated_entries(exhaustive, filter);
  if (exhaustive == 0 || have_in) {
    auto more = read_entries(io.in());
    for (auto& e : more) {
      e.line += entries.size();
      entries.push_back(std::move(e));
    }
  }
  SurveyOptions so;
  if (c.budget_ms > 0) so.budget = std::chrono::milliseconds(c.budget_ms);
  auto summary = run_survey(entries, io.out(), so);
  if (summary.conjecture_findings() > 0)
    std::cerr << "survey: " << summary.conjecture_findings() << " conjecture finding(s), see summary\n";
  if (summary.falsified()) {
    std::cerr << "survey: FALSIFICATION recorded, see summary\n";
    return kExitFalsified;
  }
  return 0;
}

int run_selftest_cmd() {
  int failed = 0;
  for (const auto& t : run_selftest()) {
    std::cout << (t.passed ? "PASS " : "FAIL ") << t.name;
    if (!t.passed) std::cout << " (" << t.detail << ")";
    std::cout << '\n';
    failed += !t.passed;
  }
  std::cout << (failed == 0 ? "selftest: all passed\n" : "selftest: " + std::to_string(failed) + " failed\n");
  return failed == 0 ? 0 : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact independence and dissociation numbers with extremal-structure checks"};
  app.require_subcommand(1);
  int rc = 0;

  Common c_solve;
  std::string what = "both";
  auto* solve = app.add_subcommand("solve", "alpha / diss with witnesses, one JSON line per graph");
  add_common(solve, c_solve);
  solve->add_option("--what", what, "alpha, diss, both or certificate")
      ->check(CLI::IsMember({"alpha", "diss", "both", "certificate"}));
  solve->callback([&] { rc = run_solve(what, c_solve); });

  Common c_survey;
  std::size_t exhaustive = 0;
  EnumerateFilter filter;
  auto* survey = app.add_subcommand("survey", "batch verification with a summary record");
  add_common(survey, c_survey);
  survey->add_option("--exhaustive-upto", exhaustive, "also survey every connected graph of order 1..N")
      ->check(CLI::Range(std::size_t{0}, kEnumerateMaxOrder));
  survey->add_flag("--subcubic", filter.subcubic, "restrict the built-in enumeration to subcubic graphs");
  survey->add_flag("--bipartite", filter.bipartite, "restrict the built-in enumeration to bipartite graphs");
  survey->add_flag("--triangle-free", filter.triangle_free, "restrict the built-in enumeration to triangle-free graphs");
  survey->callback([&] { rc = run_survey_cmd(exhaustive, filter, survey->count("--in") > 0, c_survey); });

  Common c_gen;
  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "write graph6 for a family member or a named graph");
  add_common(gen, c_gen, false);
  gen->add_option("family", gen_args.family,
                  "Gkl, Gprimekl, cycle, complete, path, k4star, calG, random-subcubic, random-tf-subcubic, "
                  "random-cubic, random-tf-cubic, or a named graph (fig3, figl, fig1_tree, fig2_left, fig2_right, "
                  "petersen, heawood, k4, k33)")
      ->required();
  gen->add_option("--k", gen_args.k, "clique half-size for Gkl / Gprimekl");
  gen->add_option("--l", gen_args.l, "number of cliques for Gkl / Gprimekl");
  gen->add_option("--n", gen_args.n, "order for cycle, complete, path and random families");
  gen->add_option("--count", gen_args.count, "number of random graphs");
  gen->add_option("--max-blocks", gen_args.max_blocks, "largest block count for calG");
  gen->add_option("--seed", gen_args.seed, "seed for random families");
  gen->add_option("--sidecar", gen_args.sidecar, "also write the marked set of each graph as JSON lines");
  gen->callback([&] { rc = run_gen(gen_args, c_gen); });

  Common c_expand;
  std::string witness, sidecar;
  auto* expand = app.add_subcommand("expand", "expand a multigraph witness into its cubic graph");
  add_common(expand, c_expand, false);
  expand->add_option("--witness", witness, "witness JSON")->required()->check(CLI::ExistingFile);
  expand->add_option("--sidecar", sidecar, "write the canonical dissociation set and gadget map as JSON");
  expand->callback([&] { rc = run_expand(witness, sidecar, c_expand); });

  Common c_rec;
  std::string family = "calG", rec_witness;
  auto* recognize = app.add_subcommand("recognize", "membership test per graph");
  add_common(recognize, c_rec);
  recognize->add_option("--family", family, "calG, basic, cubic-extremal or Gk")
      ->check(CLI::IsMember({"calG", "basic", "cubic-extremal", "Gk"}));
  recognize->add_option("--witness", rec_witness, "witness JSON for --family Gk")->check(CLI::ExistingFile);
  recognize->callback([&] { rc = run_recognize(family, rec_witness, c_rec); });

  Common c_bounds;
  auto* bounds = app.add_subcommand("bounds", "bound report per graph; exits 1 on a violated proven bound");
  add_common(bounds, c_bounds);
  bounds->callback([&] { rc = run_bounds(c_bounds); });

  Common c_mc;
  std::uint64_t trials = 100000, seed = 1;
  unsigned z = 4;
  auto* mc = app.add_subcommand("montecarlo", "sample the random independent-set procedure");
  add_common(mc, c_mc);
  mc->add_option("--trials", trials, "number of draws")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "base seed; trial t uses substream t");
  mc->add_option("--z", z, "standard errors allowed for mean_within_z");
  mc->callback([&] { rc = run_montecarlo(trials, seed, z, c_mc); });

  auto* selftest = app.add_subcommand("selftest", "run the built-in reference examples");
  selftest->callback([&] { rc = run_selftest_cmd(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "dissalpha: " << e.what() << '\n';
    return kExitUsage;
  }
  return rc;
}
