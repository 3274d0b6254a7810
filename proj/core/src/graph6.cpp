#include "dissalpha/graph6.hpp"

#include <cstdint>
#include <set>

namespace dissalpha {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";
constexpr unsigned char kBias = 63;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

std::size_t skip_header(std::string_view s, std::string_view header) {
  return s.substr(0, header.size()) == header ? header.size() : 0;
}

/// Reads N(n) starting at pos; advances pos past it.
std::size_t read_order(std::string_view s, std::size_t& pos) {
  auto byte_at = [&](std::size_t i) -> unsigned char {
    if (i >= s.size()) throw FormatError("truncated length prefix", i);
    auto c = static_cast<unsigned char>(s[i]);
    if (!printable(c)) throw FormatError("non-printable byte in length prefix", i);
    return c;
  };
  unsigned char first = byte_at(pos);
  if (first != 126) {
    ++pos;
    return first - kBias;
  }
  if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | (byte_at(pos + 2 + i) - kBias);
    if (n < 258048) throw FormatError("malformed length prefix (8-byte form for small order)", pos);
    if (n > kGraph6MaxOrder) throw FormatError("order exceeds supported maximum", pos);
    pos += 8;
    return static_cast<std::size_t>(n);
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | (byte_at(pos + 1 + i) - kBias);
  if (n < 63) throw FormatError("malformed length prefix (4-byte form for order < 63)", pos);
  pos += 4;
  return n;
}

void write_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view strip_eol(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  std::size_t pos = skip_header(record, kGraph6Header);
  const std::size_t n = read_order(record, pos);

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (record.size() < pos + payload)
    throw FormatError("truncated adjacency payload (expected " + std::to_string(payload) + " bytes)",
                      record.size());
  if (record.size() > pos + payload) throw FormatError("trailing garbage", pos + payload);

  // column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t b = 0; b < payload; ++b) {
    auto c = static_cast<unsigned char>(record[pos + b]);
    if (!printable(c)) throw FormatError("non-printable payload byte", pos + b);
    unsigned value = c - kBias;
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = ((value >> bit) & 1U) != 0;
      if (k >= bits) {
        if (set) throw FormatError("nonzero padding bits", pos + b);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw std::invalid_argument("encode_graph6: order " + std::to_string(n) +
                                " exceeds supported maximum");
  std::string out;
  write_order(out, n);
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> packed(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (auto [u, v] : g.edges()) {  // u < v
    std::uint64_t k = static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
    packed[k / 6] |= static_cast<unsigned char>(1U << (5 - k % 6));
  }
  for (auto c : packed) out.push_back(static_cast<char>(c + kBias));
  return out;
}

Graph parse_sparse6(std::string_view record) {
  std::size_t pos = skip_header(record, kSparse6Header);
  if (pos >= record.size() || record[pos] != ':')
    throw FormatError("sparse6 record must start with ':'", pos);
  ++pos;
  const std::size_t n = read_order(record, pos);

  std::size_t k = 1;
  while ((std::size_t{1} << k) < n) ++k;

  // bit cursor over the payload bytes
  const std::size_t start = pos;
  std::size_t byte = start;
  int avail = 0;
  unsigned cur = 0;
  auto next_bit = [&](unsigned& bit) -> bool {
    if (avail == 0) {
      if (byte >= record.size()) return false;
      auto c = static_cast<unsigned char>(record[byte]);
      if (!printable(c)) throw FormatError("non-printable payload byte", byte);
      cur = c - kBias;
      ++byte;
      avail = 6;
    }
    --avail;
    bit = (cur >> avail) & 1U;
    return true;
  };

  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t v = 0;
  for (;;) {
    unsigned b = 0;
    if (!next_bit(b)) break;
    std::size_t x = 0;
    bool complete = true;
    for (std::size_t i = 0; i < k; ++i) {
      unsigned bit = 0;
      if (!next_bit(bit)) {
        complete = false;
        break;
      }
      x = (x << 1) | bit;
    }
    if (!complete) break;
    if (b == 1) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
      continue;
    }
    if (x == v) throw FormatError("sparse6 loop (graph must be simple)", byte - 1);
    Edge e{static_cast<Vertex>(x), static_cast<Vertex>(v)};
    if (!seen.insert(e).second)
      throw FormatError("sparse6 repeated edge (graph must be simple)", byte - 1);
    edges.push_back(e);
  }
  for (; byte < record.size(); ++byte)
    if (!printable(static_cast<unsigned char>(record[byte])))
      throw FormatError("non-printable payload byte", byte);
  return Graph::from_edges(n, edges);
}

Graph parse_record(std::string_view line) {
  line = strip_eol(line);
  std::size_t pos = skip_header(line, kSparse6Header);
  if (pos == 0) pos = skip_header(line, kGraph6Header);
  if (pos < line.size() && line[pos] == ':') return parse_sparse6(line);
  if (pos < line.size() && line[pos] == ';')
    throw FormatError("incremental sparse6 records are not supported", pos);
  if (line.substr(0, kSparse6Header.size()) == kSparse6Header)
    throw FormatError("sparse6 header on a graph6 record", 0);
  return parse_graph6(line);
}

bool RecordReader::next(Entry& out) {
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_;
    std::string_view text = strip_eol(raw);
    if (text.empty()) continue;
    out = Entry{};
    out.line = line_;
    out.text = std::string(text);
    try {
      out.graph = parse_record(text);
    } catch (const FormatError& e) {
      out.error = e.what();
    } catch (const std::invalid_argument& e) {
      out.error = e.what();
    }
    return true;
  }
  return false;
}

}  // namespace dissalpha
