#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace exclugraph {

using VertexSet = std::uint64_t;

// Simple undirected graph on at most 64 vertices. Row v of the adjacency
// relation is a single 64-bit word, so neighbourhood algebra is bitwise.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }
  int edge_count() const noexcept;
  VertexSet all_vertices() const noexcept;

  // Sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degree_sequence() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_pair(int u, int v) const;

  int n_;
  std::array<VertexSet, kMaxVertices> rows_{};
};

// Bijection on {0, ..., n-1}; maps vertex v to mapping[v].
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<int> mapping);
  static VertexPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(map_.size()); }
  int operator()(int v) const noexcept { return map_[v]; }
  const std::vector<int>& mapping() const noexcept { return map_; }
  bool is_identity() const noexcept;

  VertexPermutation inverse() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation& a, const VertexPermutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<int> map_;
};

// (outer ∘ inner)(v) = outer(inner(v)).
VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner);

Graph complement(const Graph& g);

// Graph with edge sigma(u)sigma(v) for every edge uv of g.
Graph relabel(const Graph& g, const VertexPermutation& sigma);

// Co-normal product. Vertex (a, b) is numbered a * h.order() + b.
Graph or_product(const Graph& g, const Graph& h);

bool is_independent(const Graph& g, VertexSet set) noexcept;
bool is_clique(const Graph& g, VertexSet set) noexcept;

inline VertexSet singleton(int v) noexcept { return VertexSet{1} << v; }
std::vector<int> to_indices(VertexSet set);
VertexSet from_indices(const std::vector<int>& vertices);

}  // namespace exclugraph
