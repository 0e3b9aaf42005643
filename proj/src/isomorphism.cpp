#include "exclugraph/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "exclugraph/error.hpp"

namespace exclugraph {
namespace {

bool preserves_adjacency(const Graph& g, const Graph& h, const std::vector<int>& map) {
  for (int u = 0; u < g.order(); ++u) {
    VertexSet image = 0;
    for (VertexSet rest = g.neighbors(u); rest; rest &= rest - 1) image |= singleton(map[std::countr_zero(rest)]);
    if (image != h.neighbors(map[u])) return false;
  }
  return true;
}

// Individualization-refinement search for one isomorphism g -> h. Both
// graphs share one colour space; vertices of g and h with equal colours are
// the only admissible images.
class PairSearch {
 public:
  PairSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {}

  // Runs the search with the optional pins (g-vertex -> h-vertex) applied.
  void run(const std::vector<std::pair<int, int>>& pins) {
    std::vector<int> cg(n_, 0), ch(n_, 0);
    int next = 1;
    for (auto [a, b] : pins) {
      cg[a] = next;
      ch[b] = next;
      ++next;
    }
    if (!refine(cg, ch)) return;
    descend(cg, ch);
  }

  const std::vector<std::vector<int>>& found() const { return found_; }

 private:
  // Iterated 1-WL on both graphs jointly. False when the colour histograms
  // of g and h diverge, which rules out any isomorphism under these colours.
  bool refine(std::vector<int>& cg, std::vector<int>& ch) const {
    int classes = -1;
    for (;;) {
      const int colours = 1 + std::max(*std::max_element(cg.begin(), cg.end()),
                                       *std::max_element(ch.begin(), ch.end()));
      using Signature = std::vector<int>;
      auto signature = [&](const Graph& graph, const std::vector<int>& c, int v) {
        Signature s(colours + 1, 0);
        s[0] = c[v];
        for (VertexSet rest = graph.neighbors(v); rest; rest &= rest - 1) ++s[1 + c[std::countr_zero(rest)]];
        return s;
      };
      std::map<Signature, std::pair<int, int>> counts;  // signature -> (count in g, count in h)
      std::vector<Signature> sg(n_), sh(n_);
      for (int v = 0; v < n_; ++v) {
        sg[v] = signature(g_, cg, v);
        sh[v] = signature(h_, ch, v);
        ++counts[sg[v]].first;
        ++counts[sh[v]].second;
      }
      std::map<Signature, int> relabel;
      for (const auto& [sig, pair] : counts) {
        if (pair.first != pair.second) return false;
        relabel.emplace(sig, static_cast<int>(relabel.size()));
      }
      for (int v = 0; v < n_; ++v) {
        cg[v] = relabel[sg[v]];
        ch[v] = relabel[sh[v]];
      }
      if (static_cast<int>(relabel.size()) == classes) return true;
      classes = static_cast<int>(relabel.size());
    }
  }

  bool descend(const std::vector<int>& cg, const std::vector<int>& ch) {
    const int colours = 1 + *std::max_element(cg.begin(), cg.end());
    std::vector<int> size(colours, 0);
    for (int c : cg) ++size[c];

    int target = -1;
    for (int c = 0; c < colours; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

    if (target < 0) {
      std::vector<int> map(n_);
      std::vector<int> by_colour(colours);
      for (int v = 0; v < n_; ++v) by_colour[ch[v]] = v;
      for (int v = 0; v < n_; ++v) map[v] = by_colour[cg[v]];
      if (!preserves_adjacency(g_, h_, map)) return false;
      found_.push_back(std::move(map));
      return true;
    }

    int pivot = 0;
    while (cg[pivot] != target) ++pivot;
    for (int image = 0; image < n_; ++image) {
      if (ch[image] != target) continue;
      std::vector<int> ng = cg, nh = ch;
      ng[pivot] = colours;
      nh[image] = colours;
      if (refine(ng, nh) && descend(ng, nh)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<std::vector<int>> found_;
};

// Exhaustive permutation scan with pins. Suitable only for small n.
std::vector<std::vector<int>> exhaustive_search(const Graph& g, const Graph& h, bool find_all,
                                                const std::vector<std::pair<int, int>>& pins) {
  std::vector<std::vector<int>> found;
  std::vector<int> map(g.order());
  std::iota(map.begin(), map.end(), 0);
  do {
    bool pinned = std::all_of(pins.begin(), pins.end(), [&](auto p) { return map[p.first] == p.second; });
    if (pinned && preserves_adjacency(g, h, map)) {
      found.push_back(map);
      if (!find_all) break;
    }
  } while (std::next_permutation(map.begin(), map.end()));
  return found;
}

bool use_exhaustive(SearchStrategy strategy, int n) {
  return strategy == SearchStrategy::exhaustive ||
         (strategy == SearchStrategy::automatic && n <= kExhaustiveSearchLimit);
}

std::vector<std::vector<int>> search(const Graph& g, const Graph& h, const std::vector<std::pair<int, int>>& pins,
                                     SearchStrategy strategy) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return {};
  if (use_exhaustive(strategy, g.order())) return exhaustive_search(g, h, false, pins);
  PairSearch s(g, h);
  s.run(pins);
  return s.found();
}

// Stabilizer chain of Aut(g) along the base 0, 1, ..., n-1: level i holds
// one automorphism fixing 0..i-1 and sending i to u, for every u in the
// orbit of i under that stabilizer. Every automorphism factors uniquely as
// t_0 o t_1 o ... o t_{n-1} with t_i from level i.
std::vector<std::vector<std::vector<int>>> stabilizer_chain(const Graph& g) {
  const int n = g.order();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<std::vector<int>>> chain(n);
  std::vector<std::pair<int, int>> pins;
  double order = 1;
  for (int v = 0; v < n; ++v) {
    chain[v].push_back(identity);
    for (int u = 0; u < n; ++u) {
      if (u == v || g.degree(u) != g.degree(v)) continue;
      auto with_image = pins;
      with_image.emplace_back(v, u);
      PairSearch s(g, g);
      s.run(with_image);
      if (!s.found().empty()) chain[v].push_back(s.found().front());
    }
    order *= static_cast<double>(chain[v].size());
    if (order > static_cast<double>(kMaxGroupOrder)) {
      throw CapacityError("automorphism group order exceeds " + std::to_string(kMaxGroupOrder));
    }
    pins.emplace_back(v, v);
  }
  return chain;
}

void expand_chain(const std::vector<std::vector<std::vector<int>>>& chain, std::size_t level,
                  const std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (level == chain.size()) {
    out.push_back(prefix);
    return;
  }
  std::vector<int> next(prefix.size());
  for (const auto& t : chain[level]) {
    for (std::size_t x = 0; x < prefix.size(); ++x) next[x] = prefix[t[x]];
    expand_chain(chain, level + 1, next, out);
  }
}

}  // namespace

std::optional<VertexPermutation> find_isomorphism(const Graph& g, const Graph& h, SearchStrategy strategy) {
  auto found = search(g, h, {}, strategy);
  if (found.empty()) return std::nullopt;
  return VertexPermutation(std::move(found.front()));
}

AutomorphismGroup automorphism_group(const Graph& g, SearchStrategy strategy) {
  AutomorphismGroup group;
  std::vector<std::vector<int>> maps;
  if (use_exhaustive(strategy, g.order())) {
    maps = exhaustive_search(g, g, true, {});
  } else {
    std::vector<int> identity(g.order());
    std::iota(identity.begin(), identity.end(), 0);
    expand_chain(stabilizer_chain(g), 0, identity, maps);
  }
  group.elements.reserve(maps.size());
  for (auto& m : maps) group.elements.emplace_back(std::move(m));
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g) {
  const int n = g.order();
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int rep = 0; rep < n; ++rep) {
    if (orbit_of[rep] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.push_back({rep});
    orbit_of[rep] = id;
    for (int v = rep + 1; v < n; ++v) {
      if (orbit_of[v] >= 0 || g.degree(v) != g.degree(rep)) continue;
      auto found = search(g, g, {{rep, v}}, SearchStrategy::automatic);
      if (found.empty()) continue;
      // The automorphism also moves other vertices into this orbit; follow
      // its cycle through rep to harvest them.
      const auto& map = found.front();
      for (int u = map[rep]; u != rep; u = map[u]) {
        if (orbit_of[u] < 0) {
          orbit_of[u] = id;
          orbits[id].push_back(u);
        }
      }
    }
    std::sort(orbits[id].begin(), orbits[id].end());
  }
  return orbits;
}

bool is_vertex_transitive(const Graph& g) { return vertex_orbits(g).size() == 1; }

std::optional<VertexPermutation> is_self_complementary(const Graph& g) {
  return find_isomorphism(g, complement(g));
}

}  // namespace exclugraph
