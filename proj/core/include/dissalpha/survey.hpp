#pragma once

#include <chrono>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dissalpha/bounds.hpp"
#include "dissalpha/enumerate.hpp"
#include "dissalpha/graph6.hpp"
#include "dissalpha/recognizers.hpp"

namespace dissalpha {

inline constexpr const char* kSurveyFormatVersion = "dissalpha-survey/1";

struct SurveyOptions {
  /// Per-graph wall-clock budget; a record that exceeds it gets status
  /// "timeout".
  std::optional<std::chrono::milliseconds> budget;
  std::size_t workers = 0;  ///< 0: worker_count()
};

/// Everything the survey learns about one input record.
struct SurveyRecord {
  std::size_t line = 0;
  std::string graph6;
  std::string status = "ok";  ///< ok, timeout, parse_error, unsupported
  std::string error;

  std::size_t order = 0;
  GraphClass cls;
  std::size_t alpha = 0;
  std::size_t diss = 0;
  VertexSet independent_set;
  VertexSet dissociation_set;
  BoundReport bounds;

  bool basic_extremal = false;
  /// Attempted for connected subcubic graphs only.
  bool decomposition_attempted = false;
  std::optional<BlockDecomposition> decomposition;

  bool cubic_extremal = false;  ///< connected cubic, n >= 6, 5 alpha = 3 diss
  std::optional<CubicExtremalProfile> cubic_profile;

  /// Subcubic graphs only.
  std::optional<DissCertificate> certificate;

  /// Each entry contradicts a proven statement.
  std::vector<std::string> falsifications;

  Rational ratio() const;
};

/// Runs the full per-graph analysis. Never throws for a graph of order at
/// most kSolverMaxOrder; larger graphs get status "unsupported".
SurveyRecord survey_graph(const Graph& g, const SurveyOptions& opts = {});

nlohmann::json to_json(const SurveyRecord& r);

/// Aggregates records in input order.
class SurveySummary {
 public:
  void add(const SurveyRecord& r);
  bool falsified() const { return !falsifications_.empty(); }
  std::size_t conjecture_findings() const { return conjecture_.size(); }
  nlohmann::json to_json() const;

 private:
  struct ClassStats {
    std::size_t count = 0;
    std::optional<Rational> min_ratio;
    std::string min_ratio_graph6;
  };
  std::size_t total_ = 0;
  std::map<std::string, std::size_t> status_;
  std::map<std::string, ClassStats> classes_;
  std::vector<std::string> basic_extremal_;
  std::vector<std::string> cubic_extremal_;
  std::vector<nlohmann::json> bipartite_tight_;
  bool bipartite_tight_all_trees_ = true;
  std::vector<nlohmann::json> falsifications_;
  std::vector<nlohmann::json> conjecture_;
};

/// Input entries for a survey: records read from a stream, and/or every
/// graph of order 1..n produced by the built-in enumerator.
std::vector<RecordReader::Entry> read_entries(std::istream& in);
std::vector<RecordReader::Entry> enumerated_entries(std::size_t upto, const EnumerateFilter& filter);

/// Writes a header line, one record line per entry in input order and a
/// summary line, all JSON. Work is spread over the worker pool in batches.
/// Returns the summary.
SurveySummary run_survey(const std::vector<RecordReader::Entry>& entries, std::ostream& out,
                         const SurveyOptions& opts = {});

}  // namespace dissalpha
