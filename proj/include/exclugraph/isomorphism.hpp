#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exclugraph/graph.hpp"

namespace exclugraph {

struct AutomorphismGroup {
  std::vector<VertexPermutation> elements;  // sorted, identity first

  std::size_t order() const noexcept { return elements.size(); }
};

// Backtracking search strategy. `automatic` uses exhaustive permutation
// enumeration for n <= 8 and individualization-refinement above that.
enum class SearchStrategy { automatic, exhaustive, refinement };

inline constexpr std::size_t kMaxGroupOrder = 10'000'000;
inline constexpr int kExhaustiveSearchLimit = 8;

// Returns sigma with u~v in g iff sigma(u)~sigma(v) in h, if one exists.
std::optional<VertexPermutation> find_isomorphism(const Graph& g, const Graph& h,
                                                  SearchStrategy strategy = SearchStrategy::automatic);

// Throws CapacityError once the group order exceeds kMaxGroupOrder.
AutomorphismGroup automorphism_group(const Graph& g,
                                     SearchStrategy strategy = SearchStrategy::automatic);

// Vertex orbits of Aut(g), each sorted, ordered by smallest member. Computed
// by searching for one automorphism per (representative, vertex) pair, so it
// does not enumerate the group.
std::vector<std::vector<int>> vertex_orbits(const Graph& g);

bool is_vertex_transitive(const Graph& g);

// Isomorphism g -> complement(g) when g is self-complementary.
std::optional<VertexPermutation> is_self_complementary(const Graph& g);

}  // namespace exclugraph
