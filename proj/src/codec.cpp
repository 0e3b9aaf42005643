#include "exclugraph/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "exclugraph/error.hpp"

namespace exclugraph {
namespace {

constexpr int kBias = 63;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class EdgeListReader {
 public:
  explicit EdgeListReader(std::string_view text) : text_(text) {}

  Graph read() {
    skip_space();
    const std::size_t n_at = pos_;
    const long n = read_number("vertex count");
    if (n < 1) throw ParseError("vertex count must be at least 1", n_at);
    if (n > Graph::kMaxVertices) {
      throw CapacityError("edge list declares " + std::to_string(n) + " vertices; the limit is " +
                          std::to_string(Graph::kMaxVertices));
    }
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ';') throw ParseError("expected ';' after vertex count", pos_);
    ++pos_;
    Graph g(static_cast<int>(n));
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const std::size_t edge_at = pos_;
      const long u = read_number("edge endpoint");
      if (pos_ >= text_.size() || text_[pos_] != '-') throw ParseError("expected '-' inside edge", pos_);
      ++pos_;
      const long v = read_number("edge endpoint");
      if (u >= n || v >= n) throw ParseError("edge endpoint out of range", edge_at);
      if (u == v) throw ParseError("self-loop", edge_at);
      if (pos_ < text_.size() && !is_space(text_[pos_])) throw ParseError("unexpected character", pos_);
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  long read_number(const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) throw ParseError(std::string("expected ") + what, pos_);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int bits = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        bits = chunk = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(">>graph6<<")) pos = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t at) {
    if (at >= text.size()) throw ParseError("graph6 text truncated", at);
    const int value = static_cast<unsigned char>(text[at]) - kBias;
    if (value < 0 || value > 63) throw ParseError("byte outside the graph6 range 63..126", at);
    return value;
  };

  long n = 0;
  if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
      throw CapacityError("graph6 8-byte size prefix implies more than 64 vertices");
    }
    for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + k);
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n < 1) throw ParseError("graph6 vertex count must be at least 1", 0);
  if (n > Graph::kMaxVertices) {
    throw CapacityError("graph6 declares " + std::to_string(n) + " vertices; the limit is " +
                        std::to_string(Graph::kMaxVertices));
  }

  const long pairs = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected) {
    throw ParseError("graph6 body has wrong length for " + std::to_string(n) + " vertices",
                     std::min(text.size(), expected));
  }

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = byte_at(pos + static_cast<std::size_t>(bit / 6));
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = pos + static_cast<std::size_t>(bit / 6);
    if (byte_at(last) & ((1 << (6 - bit % 6)) - 1)) throw ParseError("non-zero graph6 padding bits", last);
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ";";
  for (auto [u, v] : g.edges()) out += " " + std::to_string(u) + "-" + std::to_string(v);
  return out;
}

Graph from_edge_list(std::string_view text) { return EdgeListReader(text).read(); }

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

Graph parse(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? from_graph6(text) : from_edge_list(text);
}

Graph parse_any(std::string_view text) {
  return text.find(';') != std::string_view::npos ? from_edge_list(text) : from_graph6(text);
}

}  // namespace exclugraph
