#include "dissalpha/survey.hpp"

#include <algorithm>
#include <stdexcept>

#include "dissalpha/parallel.hpp"
#include "dissalpha/serialize.hpp"
#include "dissalpha/solvers.hpp"

namespace dissalpha {

using nlohmann::json;

Rational SurveyRecord::ratio() const {
  if (diss == 0) throw std::logic_error("SurveyRecord::ratio: empty graph");
  return Rational(static_cast<std::uint64_t>(alpha), static_cast<std::uint64_t>(diss));
}

namespace {

void analyse(const Graph& g, const SolveOptions& so, SurveyRecord& r) {
  r.cls = classify(g);
  auto mis = max_independent_set(g, so);
  auto mds = max_dissociation_set(g, so);
  r.alpha = mis.value;
  r.diss = mds.value;
  r.independent_set = mis.witness;
  r.dissociation_set = mds.witness;
  r.bounds = bound_report(r.cls, g.order(), r.alpha, r.diss);
  for (const auto& b : r.bounds.bounds)
    if (b.applicable && b.proven && !b.satisfied) r.falsifications.push_back("bound " + b.name + " violated");
  if (r.diss > 0 && (2 * r.alpha < r.diss || r.alpha > r.diss))
    r.falsifications.push_back("ratio alpha/diss outside [1/2, 1]");

  r.basic_extremal = r.diss > 0 && 2 * r.alpha == r.diss;
  if (r.cls.connected && r.cls.subcubic && g.order() > 0) {
    r.decomposition_attempted = true;
    r.decomposition = decompose_block_graph(g, so);
    if (r.decomposition.has_value() != r.basic_extremal)
      r.falsifications.push_back(r.basic_extremal ? "2 alpha = diss but no block decomposition"
                                                  : "block decomposition found but 2 alpha != diss");
    if (r.decomposition) {
      auto problem = check_decomposition(g, *r.decomposition);
      if (!problem.empty()) r.falsifications.push_back("decomposition does not re-validate: " + problem);
    }
  }

  if (r.cls.connected && r.cls.cubic && g.order() >= 6) {
    r.cubic_profile = cubic_extremal_profile(g, so);
    r.cubic_extremal = r.cubic_profile.has_value();
    if (r.cubic_profile && !r.cubic_profile->violation.empty())
      r.falsifications.push_back("extremal cubic profile: " + r.cubic_profile->violation);
  }

  if (r.cls.subcubic) {
    try {
      auto c = max_diss_max_isolated(g, so);
      if (c.D.size() != r.diss) r.falsifications.push_back("certificate size differs from diss");
      if (r.alpha < c.p + c.q) r.falsifications.push_back("alpha < p + q for the certificate");
      if (r.cls.cubic) edge_count_identity(g, c);
      r.certificate = c;
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
      r.falsifications.push_back(std::string("certificate: ") + e.what());
    }
  }
}

}  // namespace

SurveyRecord survey_graph(const Graph& g, const SurveyOptions& opts) {
  SurveyRecord r;
  r.order = g.order();
  r.graph6 = encode_graph6(g);
  if (g.order() > kSolverMaxOrder) {
    r.status = "unsupported";
    r.error = "order " + std::to_string(g.order()) + " exceeds " + std::to_string(kSolverMaxOrder);
    return r;
  }
  SolveOptions so;
  if (opts.budget) so.deadline = std::chrono::steady_clock::now() + *opts.budget;
  try {
    analyse(g, so, r);
  } catch (const SolveTimeout&) {
    SurveyRecord t;
    t.order = r.order;
    t.graph6 = r.graph6;
    t.status = "timeout";
    t.error = "exceeded " + std::to_string(opts.budget->count()) + " ms";
    return t;
  }
  return r;
}

json to_json(const SurveyRecord& r) {
  json j{{"type", "record"}, {"line", r.line}, {"graph6", r.graph6}, {"status", r.status}};
  if (!r.error.empty()) j["error"] = r.error;
  if (r.status != "ok") return j;
  j["n"] = r.order;
  j["class"] = to_json(r.cls);
  j["alpha"] = r.alpha;
  j["diss"] = r.diss;
  j["ratio"] = r.diss > 0 ? json(to_json(r.ratio())) : json(nullptr);
  j["independent_set"] = to_json(r.independent_set);
  j["dissociation_set"] = to_json(r.dissociation_set);
  j["bounds"] = to_json(r.bounds)["bounds"];
  j["basic_extremal"] = r.basic_extremal;
  if (r.decomposition_attempted)
    j["decomposition"] = r.decomposition ? to_json(*r.decomposition) : json(nullptr);
  j["cubic_extremal"] = r.cubic_extremal;
  if (r.cubic_profile) j["cubic_profile"] = to_json(*r.cubic_profile);
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  j["falsifications"] = r.falsifications;
  return j;
}

void SurveySummary::add(const SurveyRecord& r) {
  ++total_;
  ++status_[r.status];
  if (r.status != "ok") return;
  std::vector<std::string> labels{"all"};
  if (r.cls.connected) labels.emplace_back("connected");
  if (r.cls.subcubic) labels.emplace_back("subcubic");
  if (r.cls.cubic) labels.emplace_back("cubic");
  if (r.cls.bipartite) labels.emplace_back("bipartite");
  if (r.cls.triangle_free) labels.emplace_back("triangle_free");
  if (r.cls.tree) labels.emplace_back("tree");
  for (const auto& l : labels) {
    auto& c = classes_[l];
    ++c.count;
    if (r.diss == 0) continue;
    auto ratio = r.ratio();
    if (!c.min_ratio || ratio < *c.min_ratio) {
      c.min_ratio = ratio;
      c.min_ratio_graph6 = r.graph6;
    }
  }
  if (r.basic_extremal) basic_extremal_.push_back(r.graph6);
  if (r.cubic_extremal) cubic_extremal_.push_back(r.graph6);
  const auto& bip = r.bounds.get("bipartite");
  if (bip.applicable && bip.tight) {
    bipartite_tight_.push_back({{"graph6", r.graph6}, {"tree", r.cls.tree}});
    bipartite_tight_all_trees_ = bipartite_tight_all_trees_ && r.cls.tree;
  }
  for (const auto& f : r.falsifications)
    falsifications_.push_back({{"line", r.line}, {"graph6", r.graph6}, {"reason", f}});
  const auto& conj = r.bounds.get("triangle_free_subcubic_conjecture");
  if (conj.applicable && !conj.satisfied)
    conjecture_.push_back({{"line", r.line},
                           {"graph6", r.graph6},
                           {"alpha", r.alpha},
                           {"diss", r.diss},
                           {"bound", dissalpha::to_json(conj.value)},
                           {"independent_set", dissalpha::to_json(r.independent_set)},
                           {"dissociation_set", dissalpha::to_json(r.dissociation_set)}});
}

json SurveySummary::to_json() const {
  json classes = json::object();
  for (const auto& [name, c] : classes_) {
    json e{{"count", c.count}};
    if (c.min_ratio) {
      e["min_ratio"] = dissalpha::to_json(*c.min_ratio);
      e["min_ratio_graph6"] = c.min_ratio_graph6;
    }
    classes[name] = e;
  }
  return {{"type", "summary"},
          {"records", total_},
          {"status", status_},
          {"classes", classes},
          {"basic_extremal", basic_extremal_},
          {"cubic_extremal", cubic_extremal_},
          {"bipartite_tight", bipartite_tight_},
          {"bipartite_tight_all_trees", bipartite_tight_all_trees_},
          {"falsified", falsified()},
          {"falsifications", falsifications_},
          {"conjecture_findings", conjecture_}};
}

std::vector<RecordReader::Entry> read_entries(std::istream& in) {
  std::vector<RecordReader::Entry> out;
  RecordReader reader(in);
  RecordReader::Entry e;
  while (reader.next(e)) out.push_back(std::move(e));
  return out;
}

std::vector<RecordReader::Entry> enumerated_entries(std::size_t upto, const EnumerateFilter& filter) {
  std::vector<RecordReader::Entry> out;
  for (std::size_t n = 1; n <= upto; ++n)
    for (auto& g : enumerate_graphs(n, filter)) {
      RecordReader::Entry e;
      e.line = out.size() + 1;
      e.text = encode_graph6(g);
      e.graph = std::move(g);
      out.push_back(std::move(e));
    }
  return out;
}

SurveySummary run_survey(const std::vector<RecordReader::Entry>& entries, std::ostream& out,
                         const SurveyOptions& opts) {
  const std::size_t workers = opts.workers == 0 ? worker_count() : opts.workers;
  out << json{{"type", "header"}, {"format", kSurveyFormatVersion}}.dump() << '\n';
  SurveySummary summary;
  const std::size_t batch = 256 * workers;
  std::vector<SurveyRecord> records;
  for (std::size_t start = 0; start < entries.size(); start += batch) {
    const std::size_t count = std::min(batch, entries.size() - start);
    records.assign(count, SurveyRecord{});
    parallel_for(count, workers, [&](std::size_t i) {
      const auto& e = entries[start + i];
      SurveyRecord r;
      if (e.graph) {
        r = survey_graph(*e.graph, opts);
      } else {
        r.status = "parse_error";
        r.graph6 = e.text;
        r.error = e.error;
      }
      r.line = e.line;
      records[i] = std::move(r);
    });
    for (const auto& r : records) {
      summary.add(r);
      out << to_json(r).dump() << '\n';
    }
  }
  out << summary.to_json().dump() << '\n';
  return summary;
}

}  // namespace dissalpha
