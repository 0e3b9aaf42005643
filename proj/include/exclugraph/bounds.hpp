#pragma once

#include <optional>
#include <vector>

#include "exclugraph/graph.hpp"
#include "exclugraph/isomorphism.hpp"
#include "exclugraph/theta.hpp"
#include "exclugraph/weights.hpp"

namespace exclugraph {

inline constexpr double kSandwichSlack = 1e-6;

struct IndependentSet {
  double value = 0;
  std::vector<int> vertices;  // sorted
};

// Exact maximum-weight independent set by branch and bound with greedy
// clique-cover bounds. Among optimal sets the lexicographically smallest
// vertex sequence is returned; zero-weight vertices are never included.
IndependentSet independence_number(const Graph& g, const WeightVector& w);

// Every maximal clique (Bron-Kerbosch with Tomita pivoting), each sorted,
// the list in lexicographic order. Isolated vertices give singletons.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

struct FractionalPacking {
  double value = 0;
  std::vector<double> point;
  std::vector<std::vector<int>> cliques;
  std::vector<double> clique_duals;  // LP dual, one per clique
};

// maximize w.x  s.t.  sum_{i in C} x_i <= 1 for every maximal clique C, x >= 0.
FractionalPacking fractional_packing(const Graph& g, const WeightVector& w);

struct BoundsReport {
  double alpha = 0;
  double theta = 0;
  double alpha_star = 0;
  bool unit_weights = false;
  bool vertex_transitive = false;
  std::optional<VertexPermutation> self_complementary;  // the isomorphism G -> complement(G)

  IndependentSet independent_set;
  ThetaSolution theta_solution;
  FractionalPacking packing;

  // Maxima of S = sum_i P_i under unit weights (classical, quantum, E principle).
  std::optional<double> s_max_classical() const { return unit_weights ? std::optional(alpha) : std::nullopt; }
  std::optional<double> s_max_quantum() const { return unit_weights ? std::optional(theta) : std::nullopt; }
  std::optional<double> s_max_exclusivity() const {
    return unit_weights ? std::optional(alpha_star) : std::nullopt;
  }
};

// Throws NumericalError if alpha <= theta <= alpha_star fails beyond
// kSandwichSlack.
BoundsReport bounds_report(const Graph& g, const WeightVector& w, const SdpOptions& options = {});

}  // namespace exclugraph
