#include "exclugraph/graph.hpp"

#include <numeric>
#include <string>

#include "exclugraph/error.hpp"

namespace exclugraph {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw ParameterError("graph needs at least one vertex, got " + std::to_string(n));
  if (n > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; the limit is " +
                        std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

VertexSet Graph::all_vertices() const noexcept {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ParameterError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " out of range for " + std::to_string(n_) + " vertices");
  }
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] |= singleton(v);
  rows_[v] |= singleton(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] &= ~singleton(v);
  rows_[v] &= ~singleton(u);
}

VertexPermutation::VertexPermutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (int image : map_) {
    if (image < 0 || image >= static_cast<int>(map_.size()) || seen[image]) {
      throw ParameterError("vertex mapping is not a bijection");
    }
    seen[image] = true;
  }
}

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return VertexPermutation(std::move(m));
}

bool VertexPermutation::is_identity() const noexcept {
  for (int v = 0; v < size(); ++v)
    if (map_[v] != v) return false;
  return true;
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int v = 0; v < size(); ++v) inv[map_[v]] = v;
  return VertexPermutation(std::move(inv));
}

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
  if (outer.size() != inner.size()) throw ParameterError("composing permutations of different sizes");
  std::vector<int> m(inner.size());
  for (int v = 0; v < inner.size(); ++v) m[v] = outer(inner(v));
  return VertexPermutation(std::move(m));
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph relabel(const Graph& g, const VertexPermutation& sigma) {
  if (sigma.size() != g.order()) throw ParameterError("permutation size does not match graph order");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(sigma(u), sigma(v));
  return out;
}

Graph or_product(const Graph& g, const Graph& h) {
  const int n = g.order() * h.order();
  if (n > Graph::kMaxVertices) {
    throw CapacityError("OR product would have " + std::to_string(n) + " vertices; the limit is " +
                        std::to_string(Graph::kMaxVertices));
  }
  Graph out(n);
  const int m = h.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x / m, y / m) || h.adjacent(x % m, y % m)) out.add_edge(x, y);
    }
  }
  return out;
}

bool is_independent(const Graph& g, VertexSet set) noexcept {
  for (VertexSet rest = set; rest; rest &= rest - 1) {
    if (g.neighbors(std::countr_zero(rest)) & set) return false;
  }
  return true;
}

bool is_clique(const Graph& g, VertexSet set) noexcept {
  for (VertexSet rest = set; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (((g.neighbors(v) | singleton(v)) & set) != set) return false;
  }
  return true;
}

std::vector<int> to_indices(VertexSet set) {
  std::vector<int> out;
  for (; set; set &= set - 1) out.push_back(std::countr_zero(set));
  return out;
}

VertexSet from_indices(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= singleton(v);
  return s;
}

}  // namespace exclugraph
