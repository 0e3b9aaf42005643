#include "exclugraph/bounds.hpp"

#include <algorithm>
#include <string>

#include "exclugraph/error.hpp"
#include "exclugraph/lp.hpp"

namespace exclugraph {
namespace {

constexpr double kTieTolerance = 1e-12;

void check_size(const Graph& g, const WeightVector& w) {
  if (w.size() != g.order()) {
    throw ParameterError("weight vector has " + std::to_string(w.size()) + " entries for " +
                         std::to_string(g.order()) + " vertices");
  }
}

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, const WeightVector& w) : g_(g), w_(w) {}

  IndependentSet run() {
    VertexSet candidates = 0;
    for (int v = 0; v < g_.order(); ++v)
      if (w_[v] > 0) candidates |= singleton(v);
    best_value_ = 0;
    best_ = 0;
    branch(0, 0.0, candidates);
    return {best_value_, to_indices(best_)};
  }

 private:
  // Greedy partition of `p` into cliques; an independent set meets each
  // clique at most once, so the sum of per-clique maxima bounds it.
  double clique_cover_bound(VertexSet p) const {
    double bound = 0;
    while (p) {
      const int v = std::countr_zero(p);
      double heaviest = w_[v];
      VertexSet clique = singleton(v);
      VertexSet cand = p & g_.neighbors(v);
      while (cand) {
        const int u = std::countr_zero(cand);
        clique |= singleton(u);
        heaviest = std::max(heaviest, w_[u]);
        cand &= g_.neighbors(u);
      }
      bound += heaviest;
      p &= ~clique;
    }
    return bound;
  }

  // Include-before-exclude in increasing vertex order visits optimal sets in
  // lexicographic order, and only strict improvements replace the incumbent.
  void branch(VertexSet chosen, double value, VertexSet p) {
    if (!p) {
      if (value > best_value_ + kTieTolerance * std::max(1.0, best_value_)) {
        best_value_ = value;
        best_ = chosen;
      }
      return;
    }
    if (value + clique_cover_bound(p) <= best_value_ + kTieTolerance * std::max(1.0, best_value_)) return;
    const int v = std::countr_zero(p);
    branch(chosen | singleton(v), value + w_[v], p & ~g_.neighbors(v) & ~singleton(v));
    branch(chosen, value, p & ~singleton(v));
  }

  const Graph& g_;
  const WeightVector& w_;
  double best_value_ = 0;
  VertexSet best_ = 0;
};

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<std::vector<int>>& out) {
  if (!p && !x) {
    out.push_back(to_indices(r));
    return;
  }
  int pivot = -1;
  int best = -1;
  for (VertexSet rest = p | x; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const int covered = std::popcount(p & g.neighbors(u));
    if (covered > best) {
      best = covered;
      pivot = u;
    }
  }
  for (VertexSet rest = p & ~g.neighbors(pivot); rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    bron_kerbosch(g, r | singleton(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~singleton(v);
    x |= singleton(v);
  }
}

}  // namespace

IndependentSet independence_number(const Graph& g, const WeightVector& w) {
  check_size(g, w);
  return IndependentSetSearch(g, w).run();
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  bron_kerbosch(g, 0, g.all_vertices(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

FractionalPacking fractional_packing(const Graph& g, const WeightVector& w) {
  check_size(g, w);
  FractionalPacking out;
  out.cliques = maximal_cliques(g);

  LpProblem<double> lp;
  lp.objective.assign(w.values().begin(), w.values().end());
  for (const auto& clique : out.cliques) {
    LinearConstraint<double> row{std::vector<double>(g.order(), 0.0), 1.0};
    for (int v : clique) row.coefficients[v] = 1.0;
    lp.constraints.push_back(std::move(row));
  }
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) throw NumericalError("fractional packing LP did not reach an optimum");
  out.value = sol.value;
  out.point = std::move(sol.point);
  out.clique_duals = std::move(sol.duals);
  return out;
}

BoundsReport bounds_report(const Graph& g, const WeightVector& w, const SdpOptions& options) {
  check_size(g, w);
  BoundsReport r;
  r.unit_weights = w.is_unit();
  r.independent_set = independence_number(g, w);
  r.alpha = r.independent_set.value;
  r.packing = fractional_packing(g, w);
  r.alpha_star = r.packing.value;

  bool any_positive = false;
  for (double x : w.values()) any_positive = any_positive || x > 0;
  if (any_positive) {
    r.theta_solution = solve_theta_sdp(g, w.values(), options);
    r.theta = r.theta_solution.value;
  }
  r.vertex_transitive = is_vertex_transitive(g);
  r.self_complementary = is_self_complementary(g);

  if (r.alpha > r.theta + kSandwichSlack || r.theta > r.alpha_star + kSandwichSlack) {
    throw NumericalError("bound sandwich alpha <= theta <= alpha* violated: " + std::to_string(r.alpha) + ", " +
                             std::to_string(r.theta) + ", " + std::to_string(r.alpha_star),
                         r.theta_solution.value, r.theta_solution.dual_value);
  }
  return r;
}

}  // namespace exclugraph
