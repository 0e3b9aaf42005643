// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "exclugraph/bounds.hpp"
#include "exclugraph/families.hpp"
#include "exclugraph/isomorphism.hpp"
#include "exclugraph/quantum_set.hpp"
#include "oracles.hpp"

using namespace exclugraph;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  Outcome() { detail.precision(10); }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

SolverHealth health;

ThetaSolution theta(const Graph& g, std::span<const double> w) {
  auto s = solve_theta_sdp(g, w);
  health.record(s);
  return s;
}

ThetaSolution theta(const Graph& g) { return theta(g, std::vector<double>(g.order(), 1.0)); }

BoundsReport report(const Graph& g) {
  auto r = bounds_report(g, WeightVector::unit(g.order()));
  health.record(r.theta_solution);
  return r;
}

void pentagon_bounds(Outcome& o) {
  const auto r = report(cycle_graph(5));
  const double closed_form = oracle::odd_cycle_theta(5);
  o.require(r.alpha == 2.0, "alpha(C5) == 2");
  o.require(std::abs(r.theta - closed_form) <= 1e-6, "theta(C5) matches closed form");
  o.require(std::abs(r.theta - 2.2360680) <= 1e-6, "theta(C5) = 2.2360680");
  o.require(std::abs(r.alpha_star - 2.5) <= 1e-9, "alpha*(C5) = 2.5");
  o.detail << "alpha=" << r.alpha << " theta=" << r.theta << " alpha*=" << r.alpha_star;
}

void structural_flags(Outcome& o) {
  const Graph c5 = cycle_graph(5), p3 = path_graph(3);
  const bool c5_vt = is_vertex_transitive(c5), c5_sc = is_self_complementary(c5).has_value();
  const bool p3_vt = is_vertex_transitive(p3), p3_sc = is_self_complementary(p3).has_value();
  o.require(c5_vt && c5_sc, "C5 vertex-transitive and self-complementary");
  o.require(!p3_vt && !p3_sc, "P3 neither");
  o.detail << "C5 vt=" << c5_vt << " sc=" << c5_sc << ", P3 vt=" << p3_vt << " sc=" << p3_sc;
}

void complement_duality(Outcome& o) {
  const std::pair<const char*, Graph> graphs[] = {{"C5", cycle_graph(5)},
                                                  {"C7", cycle_graph(7)},
                                                  {"C9", cycle_graph(9)},
                                                  {"circulant(8,{1,4})", circulant_graph(8, {1, 4})},
                                                  {"Petersen", petersen_graph()}};
  double worst = 0;
  for (const auto& [name, g] : graphs) {
    const double product = theta(g).value * theta(complement(g)).value;
    const double deviation = std::abs(product - g.order());
    worst = std::max(worst, deviation);
    o.require(deviation <= 1e-5, std::string(name) + " product equals n");
  }
  o.detail << "max |theta*theta_c - n| = " << worst;
}

void chsh_graph(Outcome& o) {
  const Graph g = circulant_graph(8, {1, 4});
  const auto r = report(g);
  const double exhaustive = oracle::max_weight_independent_set(g, std::vector<double>(8, 1.0));
  o.require(r.alpha == 3.0 && exhaustive == 3.0, "alpha = 3 (branch and bound and exhaustive)");
  o.require(std::abs(r.alpha_star - 4.0) <= 1e-9, "alpha* = 4");

  // Independent certificate: x = 1/2 is feasible for every maximal clique
  // and a dual solution of value 4 covers every vertex.
  const auto cliques = oracle::maximal_cliques(g);
  bool half_feasible = true;
  for (const auto& c : cliques) half_feasible = half_feasible && 0.5 * c.size() <= 1.0 + 1e-12;
  o.require(half_feasible, "x = 1/2 feasible");
  const auto& packing = r.packing;
  const double dual_value = std::accumulate(packing.clique_duals.begin(), packing.clique_duals.end(), 0.0);
  std::vector<double> cover(8, 0.0);
  for (std::size_t k = 0; k < packing.cliques.size(); ++k) {
    o.require(packing.clique_duals[k] >= -1e-12, "dual non-negative");
    for (int v : packing.cliques[k]) cover[v] += packing.clique_duals[k];
  }
  o.require(std::abs(dual_value - 4.0) <= 1e-9, "dual value 4 matches primal 8 * 1/2");
  o.require(std::all_of(cover.begin(), cover.end(), [](double c) { return c >= 1 - 1e-9; }), "dual covers vertices");

  const double theta_c = theta(complement(g)).value;
  o.require(std::abs(r.theta - 3.4142136) <= 1e-5, "theta = 2 + sqrt 2");
  o.require(std::abs(r.theta * theta_c - 8.0) <= 1e-5, "theta cross-checked by complement product");
  o.detail << "alpha=" << r.alpha << " alpha*=" << r.alpha_star << " theta=" << r.theta
           << " theta*theta_c=" << r.theta * theta_c;
}

void result2_pentagon(Outcome& o) {
  const auto r = verify_result2(cycle_graph(5), {0.05, 0.1, 0.2});
  health.merge(r.health);
  const double expected[] = {1.05, 1.10, 1.20};
  o.require(r.entries.size() == 3, "three entries");
  for (std::size_t k = 0; k < r.entries.size() && k < 3; ++k) {
    const auto& e = r.entries[k];
    o.require(std::abs(e.product - expected[k]) <= 1e-4, "product near 1 + eps");
    o.require(e.product > 1.0, "product strictly above 1");
    o.require(e.witness_check <= 1.0 + 1e-6, "witness in Q(complement)");
    o.require(e.permuted_check <= 1.0 + 1e-6, "permuted witness in Q(G)");
    o.detail << (k ? ", " : "products ") << e.product;
  }
}

void membership_sharpness(Outcome& o) {
  const Graph c5 = cycle_graph(5);
  const double root5 = std::sqrt(5.0);
  auto verdict = [&](double level) {
    auto v = membership(c5, Distribution::constant(5, level));
    health.merge(v.health);
    return v;
  };
  const auto on = verdict(1 / root5), in = verdict(0.4), out = verdict(0.5);
  o.require(on.classification == Classification::boundary && std::abs(on.theta_complement - 1) <= 1e-6,
            "1/sqrt5 on the boundary");
  o.require(in.classification == Classification::inside && std::abs(in.theta_complement - 0.4 * root5) <= 1e-6,
            "0.4 inside");
  o.require(out.classification == Classification::outside && std::abs(out.theta_complement - 0.5 * root5) <= 1e-6,
            "0.5 outside");
  o.detail << "theta_c: " << on.theta_complement << " (" << to_string(on.classification) << "), "
           << in.theta_complement << " (" << to_string(in.classification) << "), " << out.theta_complement
           << " (" << to_string(out.classification) << ")";
}

void sandwich_corpus(Outcome& o) {
  int graphs = 0;
  double worst = -1;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      ++graphs;
      const auto r = report(g);
      const double slack = std::max(r.alpha - r.theta, r.theta - r.alpha_star);
      worst = std::max(worst, slack);
      if (slack > 1e-6) o.require(false, "sandwich on " + std::to_string(n) + "-vertex graph");
    }
  }
  o.require(graphs == 995, "corpus has 995 connected graphs");
  o.detail << graphs << " graphs, max violation " << std::max(0.0, worst);
}

void symmetrization(Outcome& o) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_idem = 0, worst_sum = 0, worst_spread = 0;
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), petersen_graph()}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> v(g.order());
      for (double& x : v) x = unit(rng);
      const Distribution p(v);
      const auto q = symmetrize(g, p);
      const auto qq = symmetrize(g, q);
      for (int i = 0; i < g.order(); ++i) worst_idem = std::max(worst_idem, std::abs(qq[i] - q[i]));
      worst_sum = std::max(worst_sum, std::abs(q.sum() - p.sum()));
      const auto [lo, hi] = std::minmax_element(q.values().begin(), q.values().end());
      worst_spread = std::max(worst_spread, *hi - *lo);
    }
  }
  o.require(worst_idem <= 1e-12, "idempotent");
  o.require(worst_sum <= 1e-12, "sum preserving");
  o.require(worst_spread <= 1e-12, "constant on vertex-transitive graphs");
  o.detail << "300 distributions, idempotence " << worst_idem << ", sum " << worst_sum << ", spread " << worst_spread;
}

void or_product_consistency(Outcome& o) {
  const Graph c5 = cycle_graph(5);
  const double factor = theta(complement(c5)).value;
  const double value = theta(complement(or_product(c5, c5))).value;
  o.require(std::abs(value - 5.0) <= 1e-4, "theta of the product complement = 5");
  o.require(std::abs(value - factor * factor) <= 1e-4, "multiplicative over the factor");
  o.detail << "theta=" << value << " factor^2=" << factor * factor;
}

void result1_suite(Outcome& o) {
  const auto r = verify_result1(cycle_graph(5), 100, 7);
  health.merge(r.health);
  o.require(r.trials == 100, "100 trials");
  o.require(r.e_product_violations == 0, "no E-product violations among inside points");
  o.require(r.witnesses_verified == r.outside && r.witness_failures == 0, "every outside point witnessed");
  o.detail << "inside " << r.inside << ", boundary " << r.boundary << ", outside " << r.outside << ", checks "
           << r.e_product_checks << ", violations " << r.e_product_violations << ", witnesses "
           << r.witnesses_verified << "/" << r.outside;
}

void solver_health(Outcome& o) {
  o.require(health.max_gap <= 1e-8, "gap <= 1e-8");
  o.require(health.min_eigenvalue >= -1e-9, "min eigenvalue >= -1e-9");
  o.require(health.max_edge_entry <= 1e-9, "edge entries <= 1e-9");
  o.detail << health.solves << " solves, max gap " << health.max_gap << ", min eigenvalue " << health.min_eigenvalue
           << ", max edge entry " << health.max_edge_entry << ", max iterations " << health.max_iterations;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Outcome&)> check;
  };
  const Criterion criteria[] = {
      {1, "pentagon bounds", 1, pentagon_bounds},
      {2, "structural flags", 1, structural_flags},
      {3, "complement duality on vertex-transitive graphs", 30, complement_duality},
      {4, "CHSH graph bounds", 10, chsh_graph},
      {5, "supra-quantum witnesses on the pentagon", 20, result2_pentagon},
      {6, "membership boundary sharpness", 5, membership_sharpness},
      {7, "sandwich on connected graphs up to 7 vertices", 600, sandwich_corpus},
      {8, "symmetrization properties", 5, symmetrization},
      {9, "OR-product consistency", 120, or_product_consistency},
      {10, "E-product statistics on the pentagon", 120, result1_suite},
      {11, "solver health", 1e9, solver_health},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) o.require(false, "runtime limit " + std::to_string(c.limit_seconds) + " s");
    if (!o.passed) ++failures;
    std::printf("%s %2d %s: %s (%.3f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.str().c_str(),
                seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
