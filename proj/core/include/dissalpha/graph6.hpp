#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dissalpha/graph.hpp"

namespace dissalpha {

/// Largest order accepted by the graph6 codec.
inline constexpr std::size_t kGraph6MaxOrder = std::size_t{1} << 18;

/// Malformed graph6/sparse6 record. offset() is the byte index into the
/// record text (header included) where decoding failed.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 record; a leading ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view record);

/// Encodes g; throws std::invalid_argument when g.order() > kGraph6MaxOrder.
std::string encode_graph6(const Graph& g);

/// Decodes one sparse6 record (leading ':'; ">>sparse6<<" header accepted).
/// Loops and repeated edges are rejected since Graph is simple.
Graph parse_sparse6(std::string_view record);

/// Dispatches on the record's first payload byte and strips a trailing
/// line terminator.
Graph parse_record(std::string_view line);

/// Line-oriented reader over a stream of graph6/sparse6 records. Blank lines
/// are skipped; a malformed line yields an entry with `error` set and does
/// not affect later lines.
class RecordReader {
 public:
  struct Entry {
    std::size_t line = 0;  ///< 1-based
    std::string text;      ///< record without line terminator
    std::optional<Graph> graph;
    std::string error;
  };

  explicit RecordReader(std::istream& in) : in_(in) {}
  bool next(Entry& out);

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace dissalpha
